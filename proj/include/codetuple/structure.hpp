#pragma once

#include "codetuple/code_tuple.hpp"

#include <optional>
#include <string>
#include <vector>

namespace codetuple {

/// Subset of {0,1}: the bits that can start some output f*_i(x).
struct FirstBitSet {
    bool zero = false;
    bool one = false;

    bool empty() const noexcept { return !zero && !one; }
    bool full() const noexcept { return zero && one; }
    bool contains(bool bit) const noexcept { return bit ? one : zero; }
    bool includes(const FirstBitSet& other) const noexcept {
        return (zero || !other.zero) && (one || !other.one);
    }

    friend bool operator==(const FirstBitSet&, const FirstBitSet&) = default;
};

/// "{}", "{0}", "{1}" or "{0,1}".
std::string to_string(const FirstBitSet& set);

/// The forced first bit of a table: 0 or 1 when the first-bit set is a
/// singleton, empty when both bits are possible.
enum class ForcedBit { Zero, One, Lambda };

BitString to_bits(ForcedBit bit);

FirstBitSet first_bit_set(const CodeTuple& tuple, TableIndex i);
std::vector<FirstBitSet> first_bit_sets(const CodeTuple& tuple);

/// Throws UndefinedForcedBit when the first-bit set of table i is empty.
ForcedBit forced_bit(const CodeTuple& tuple, TableIndex i);

/// Every table can eventually emit a bit.
bool is_extendable(const CodeTuple& tuple);

/// Every first-bit set is {0,1}.
bool is_fork(const CodeTuple& tuple);

/// (max codeword length) * (number of tables) * 4.
std::size_t default_fork_budget(const CodeTuple& tuple);

/// Depth of the first branching point of the tree of outputs from table i,
/// i.e. the minimum over incomparable output pairs of the length of their
/// longest common prefix.
///
/// Only meaningful for extendable tuples that are k-bit delay decodable for
/// some k. Throws UndefinedForcedBit when table i never emits, and
/// NoForkFound when no branch appears within `budget` bits or the set of
/// live parses starts repeating without branching.
std::size_t fork_depth(const CodeTuple& tuple, TableIndex i,
                       std::optional<std::size_t> budget = std::nullopt);

/// No codeword is a prefix of another (so the empty codeword and duplicate
/// codewords are both rejected).
bool is_prefix_free(const CodeTable& table);
bool all_tables_prefix_free(const CodeTuple& tuple);

} // namespace codetuple
