#pragma once

#include "codetuple/alphabet.hpp"
#include "codetuple/code_tuple.hpp"
#include "codetuple/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace codetuple {

/// Bounded family of code-tuples: every tuple with 1..m_max tables over the
/// distribution's alphabet whose codewords are all at most len_max bits.
struct SearchSpace {
    Distribution mu;
    std::size_t m_max = 1;
    std::size_t len_max = 1;

    SearchSpace(Distribution mu, std::size_t m_max, std::size_t len_max);

    std::size_t sigma() const noexcept { return mu.size(); }
};

inline constexpr std::uint64_t default_space_cap = 100'000'000;

/// Closed-form size: sum over m of (2^(len_max+1) - 1)^(sigma m) * m^(sigma m).
/// Saturates at UINT64_MAX.
std::uint64_t count_code_tuples(const SearchSpace& space);

/// Lazy, indexable stream over a SearchSpace.
///
/// Canonical order: by table count m, then lexicographically over the digit
/// string [codewords of table 0 in symbol order, ..., codewords of table
/// m-1, transitions of table 0 in symbol order, ..., transitions of table
/// m-1], leftmost digit most significant. Codewords are ordered by (length,
/// lexicographic) and transitions by target index.
class TupleEnumerator {
public:
    /// Throws SpaceTooLarge when the space holds more than `cap` tuples.
    explicit TupleEnumerator(const SearchSpace& space, std::uint64_t cap = default_space_cap);

    std::uint64_t count() const noexcept { return total_; }

    /// The tuple at a position of the canonical order.
    CodeTuple at(std::uint64_t index) const;

    /// Next tuple of the stream, or nullopt once exhausted.
    std::optional<CodeTuple> next();

    void seek(std::uint64_t index) noexcept { cursor_ = index; }

private:
    AlphabetPtr alphabet_;
    std::size_t m_max_;
    std::vector<BitString> codeword_choices_;
    std::vector<std::uint64_t> block_start_;  // first index of each m
    std::uint64_t total_ = 0;
    std::uint64_t cursor_ = 0;
};

/// Per-tuple row of a sweep. Class flags are only evaluated as far as the
/// filter chain gets, so later flags may be absent.
struct TupleRow {
    std::uint64_t id = 0;
    std::size_t m = 0;
    bool in_ext = false;
    std::optional<bool> in_reg;
    std::optional<bool> in_kdec;
    std::optional<Rational> length;
};

struct Violation {
    std::uint64_t id = 0;
    CodeTuple tuple;
    Rational length;
};

struct TheoremReport {
    std::size_t sigma = 0;
    std::size_t m_max = 0;
    std::size_t len_max = 0;
    std::size_t k = 1;
    Rational huffman_length;
    std::uint64_t candidates_examined = 0;
    std::uint64_t in_ext = 0;
    std::uint64_t in_ext_reg = 0;
    std::uint64_t in_class = 0;
    std::optional<Rational> min_class_length;
    std::optional<std::uint64_t> best_id;
    std::optional<CodeTuple> best_tuple;
    std::vector<Violation> violations;

    /// Exact min and concatenation; independent of merge order.
    void merge(TheoremReport&& other);
};

struct SweepOptions {
    unsigned jobs = 1;
    std::uint64_t cap = default_space_cap;
    std::uint64_t chunk_size = 1 << 16;
    /// Receives every row in canonical order when set.
    std::function<void(const TupleRow&)> row_sink;
};

/// Classifies one tuple through the filter chain and fills its row.
TupleRow classify_tuple(const CodeTuple& tuple, const Distribution& mu, std::size_t k);

/// Sweeps the space and checks L(F) >= L_Huff for every survivor of
/// extendable -> regular -> k-bit delay decodable. The report is identical
/// for every jobs / chunk_size setting.
TheoremReport verify_theorem1(const SearchSpace& space, std::size_t k = 1,
                              const SweepOptions& options = {});

/// Same report for an explicit list of candidates (ids are list positions).
TheoremReport verify_theorem1(std::span<const CodeTuple> candidates, const Distribution& mu,
                              std::size_t k = 1);

/// n tuples drawn uniformly from the space with a seeded generator; the same
/// seed yields the same sequence.
std::vector<CodeTuple> sample_random_tuples(const SearchSpace& space, std::size_t n,
                                            std::uint64_t seed);

} // namespace codetuple
