#pragma once

#include "codetuple/rational.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace codetuple {

using SymbolIndex = std::size_t;
using SymbolSeq = std::vector<SymbolIndex>;

/// Source alphabet. The declaration order fixes the canonical symbol indices
/// used for every tie-break in the library.
class Alphabet {
public:
    /// Throws AlphabetTooSmall for fewer than two symbols, DuplicateSymbol
    /// for repeated names, ParseError for empty names.
    explicit Alphabet(std::vector<std::string> symbols);

    /// "a", "b", ... (then "s26", "s27", ... past z).
    static Alphabet letters(std::size_t sigma);

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::string& name(SymbolIndex s) const { return symbols_.at(s); }
    const std::vector<std::string>& symbols() const noexcept { return symbols_; }

    /// Throws Errc::UnknownSymbol.
    SymbolIndex index_of(std::string_view name) const;
    bool contains(std::string_view name) const noexcept;

    /// Splits on whitespace. A token that is not a symbol is split into
    /// characters when every character is itself a one-letter symbol, so
    /// "baed" and "b a e d" parse the same way.
    SymbolSeq parse_sequence(std::string_view text) const;
    std::string format_sequence(const SymbolSeq& x, std::string_view sep = " ") const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> symbols_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Strictly positive exact probabilities summing to 1, one per symbol.
class Distribution {
public:
    /// Throws InvalidDistribution when a probability is not in (0, 1] or the
    /// sum differs from 1, AlphabetMismatch when the sizes differ.
    Distribution(AlphabetPtr alphabet, std::vector<Rational> probs);

    static Distribution uniform(AlphabetPtr alphabet);

    const Alphabet& alphabet() const noexcept { return *alphabet_; }
    const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }
    std::size_t size() const noexcept { return probs_.size(); }
    const Rational& operator[](SymbolIndex s) const { return probs_.at(s); }
    const std::vector<Rational>& probs() const noexcept { return probs_; }

private:
    AlphabetPtr alphabet_;
    std::vector<Rational> probs_;
};

} // namespace codetuple
