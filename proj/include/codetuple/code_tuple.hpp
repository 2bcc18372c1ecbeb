#pragma once

#include "codetuple/alphabet.hpp"
#include "codetuple/bitstring.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace codetuple {

using TableIndex = std::size_t;

/// One codeword per symbol, indexed by SymbolIndex. Empty codewords are legal.
struct CodeTable {
    std::vector<BitString> codewords;

    const BitString& operator[](SymbolIndex s) const { return codewords.at(s); }
    std::size_t size() const noexcept { return codewords.size(); }
    std::size_t max_length() const noexcept;

    friend bool operator==(const CodeTable&, const CodeTable&) = default;
};

/// A time-variant encoder: m code tables f_0..f_{m-1} and m transition maps
/// tau_0..tau_{m-1}. Encoding symbol s with table i emits f_i(s) and moves to
/// table tau_i(s).
class CodeTuple {
public:
    /// Checks that there is at least one table, that every table and every
    /// transition map is total over the alphabet, and that every transition
    /// target is in [m].
    CodeTuple(AlphabetPtr alphabet, std::vector<CodeTable> tables,
              std::vector<std::vector<TableIndex>> transitions);

    std::size_t size() const noexcept { return tables_.size(); }
    std::size_t sigma() const noexcept { return alphabet_->size(); }
    const Alphabet& alphabet() const noexcept { return *alphabet_; }
    const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }

    const CodeTable& table(TableIndex i) const { return tables_.at(i); }
    const std::vector<CodeTable>& tables() const noexcept { return tables_; }
    const BitString& code(TableIndex i, SymbolIndex s) const { return tables_[i].codewords[s]; }
    TableIndex next(TableIndex i, SymbolIndex s) const { return transitions_[i][s]; }
    const std::vector<TableIndex>& transitions(TableIndex i) const { return transitions_.at(i); }

    std::size_t max_codeword_length() const noexcept;

    /// Same symbol list, codewords and transitions.
    friend bool operator==(const CodeTuple& a, const CodeTuple& b);

private:
    AlphabetPtr alphabet_;
    std::vector<CodeTable> tables_;
    std::vector<std::vector<TableIndex>> transitions_;
};

/// Unchecked table data keyed by symbol name, as read from a document.
struct RawTable {
    std::map<std::string, std::string> code;
    std::map<std::string, std::int64_t> next;
};

/// Builds a CodeTuple from name-keyed data.
///
/// Errors: EmptyTuple (no tables), MissingSymbol (a table or transition map
/// is not total), UnknownSymbol (a key outside the alphabet), IndexOutOfRange
/// (a transition target outside [m]), ParseError (a codeword is not ^[01]*$).
CodeTuple validate_code_tuple(std::span<const RawTable> raw, AlphabetPtr alphabet);

/// Inverse of validate_code_tuple.
std::vector<RawTable> to_raw(const CodeTuple& tuple);

/// The tuple consisting of a single table whose transitions all point to 0.
CodeTuple single_table_tuple(AlphabetPtr alphabet, CodeTable table);

} // namespace codetuple
