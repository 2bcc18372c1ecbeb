#pragma once

#include "codetuple/alphabet.hpp"
#include "codetuple/code_tuple.hpp"
#include "codetuple/rational.hpp"

namespace codetuple {

struct HuffmanResult {
    CodeTable table;
    Rational length;
};

/// Binary Huffman code. The merge queue is ordered by (probability, smallest
/// symbol index in the subtree); the first node popped at each merge gets
/// bit 0.
HuffmanResult huffman_code(const Distribution& mu);

Rational huffman_length(const Distribution& mu);

/// sum_s 2^-|f(s)|. An empty codeword contributes 1.
Rational kraft_sum(const CodeTable& table);

} // namespace codetuple
