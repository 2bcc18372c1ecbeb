#pragma once

#include "codetuple/code_tuple.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <span>

namespace codetuple {

/// How a pair (x, c) relates to the prefix question "is x a prefix of the
/// source?". A pair is positive when every x' whose output extends f*_i(x)c
/// has x as a prefix, negative when none does. It is both when no such x'
/// exists at all, and neither when it fails k-bit delay decodability.
enum class PairClass { PositiveOnly, NegativeOnly, Both, Neither };

const char* to_string(PairClass c) noexcept;

/// State of the decodability automaton: the reference parse sits at
/// `ref_table`, a competing parse at `comp_table`, and the competitor has
/// emitted `surplus` beyond the reference output.
struct CompetitorConfig {
    TableIndex ref_table = 0;
    TableIndex comp_table = 0;
    BitString surplus;

    friend auto operator<=>(const CompetitorConfig&, const CompetitorConfig&) = default;
};

/// A pair (x, c) from table `start` that is neither positive nor negative,
/// with one extending parse and one diverging parse both producing
/// f*_start(x) c as a prefix.
struct DelayWitness {
    TableIndex start = 0;
    SymbolSeq x;
    BitString lookahead;
    SymbolSeq extending;  ///< x is a prefix of this
    SymbolSeq diverging;  ///< x is not a prefix of this

    friend bool operator==(const DelayWitness&, const DelayWitness&) = default;
};

/// All k-bit strings c such that c is a prefix of f*_j(y) for some y.
std::set<BitString> follow_set(const CodeTuple& tuple, TableIndex j, std::size_t k);

struct DecodabilityResult {
    bool decodable = true;
    std::optional<DelayWitness> witness;
    std::size_t configs_explored = 0;
};

/// Exact decision of k-bit delay decodability, with the first witness in
/// (|x|, start table, x, c) order when the answer is negative.
///
/// k = 0 is decided by prefix-freeness of every table. For k >= 1 the search
/// runs over competitor configurations reachable after a reference parse and
/// a competitor parse diverge; a configuration fails when the reference's
/// k-bit continuations intersect the competitor's.
DecodabilityResult check_k_bit_delay(const CodeTuple& tuple, std::size_t k);

/// Same decision without building a witness.
bool is_k_bit_delay_decodable(const CodeTuple& tuple, std::size_t k);

/// Exact classification of one pair, following the competitor construction
/// along this particular x.
PairClass classify_pair(const CodeTuple& tuple, TableIndex i, std::span<const SymbolIndex> x,
                        const BitString& c);

/// Checks the two conditions of a witness by direct evaluation of f*.
bool validate_witness(const CodeTuple& tuple, const DelayWitness& witness);

/// Exhaustive falsifier: every start table, every x with |x| <= max_len,
/// every c in {0,1}^k, every x' with |x'| <= max_competitor_len (default
/// 2 * max_len). Returns the first neither-pair in (|x|, start, x, c) order.
/// A returned witness is sound; no witness proves nothing.
std::optional<DelayWitness> brute_force_refute(const CodeTuple& tuple, std::size_t k,
                                               std::size_t max_len,
                                               std::optional<std::size_t> max_competitor_len = std::nullopt);

/// Decodes `bits` starting from table i with k bits of lookahead.
///
/// A symbol is committed when its codeword and the following k bits are
/// available and those k bits can continue the parse; for a k-bit delay
/// decodable tuple such a symbol is certainly the next source symbol.
/// Decoding stops when the next decision needs bits beyond the end.
///
/// Errors: InvalidStream when no parse of the available bits exists,
/// NotDecodable when two different symbols are both certified.
SymbolSeq decode(const CodeTuple& tuple, TableIndex i, const BitString& bits, std::size_t k);

} // namespace codetuple
