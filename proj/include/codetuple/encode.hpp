#pragma once

#include "codetuple/code_tuple.hpp"

#include <span>
#include <utility>

namespace codetuple {

/// f*_i(x): the concatenated output when x is encoded starting from table i.
/// Throws UnknownSymbol for a symbol index outside the alphabet and
/// IndexOutOfRange for a bad start table.
BitString encode_star(const CodeTuple& tuple, TableIndex start, std::span<const SymbolIndex> x);

/// tau*_i(x): the table used after encoding x from table i.
TableIndex next_table(const CodeTuple& tuple, TableIndex start, std::span<const SymbolIndex> x);

/// Streaming encoder. Stepping returns a new state rather than mutating.
class EncoderState {
public:
    EncoderState(const CodeTuple& tuple, TableIndex current);

    const CodeTuple& tuple() const noexcept { return *tuple_; }
    TableIndex current_table() const noexcept { return current_; }

    /// Emits f_current(s) and moves to tau_current(s).
    std::pair<BitString, EncoderState> step(SymbolIndex s) const;

private:
    const CodeTuple* tuple_;
    TableIndex current_;
};

inline std::pair<BitString, EncoderState> encoder_step(const EncoderState& state, SymbolIndex s) {
    return state.step(s);
}

} // namespace codetuple
