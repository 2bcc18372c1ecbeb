#include "codetuple/encode.hpp"
#include "codetuple/error.hpp"

#include <string>

namespace codetuple {

namespace {

void check_start(const CodeTuple& tuple, TableIndex start) {
    if (start >= tuple.size())
        throw Error(Errc::IndexOutOfRange, "table " + std::to_string(start) + " is outside [" +
                                               std::to_string(tuple.size()) + "]");
}

void check_symbol(const CodeTuple& tuple, SymbolIndex s) {
    if (s >= tuple.sigma())
        throw Error(Errc::UnknownSymbol, "symbol index " + std::to_string(s) + " is outside the alphabet");
}

} // namespace

BitString encode_star(const CodeTuple& tuple, TableIndex start, std::span<const SymbolIndex> x) {
    check_start(tuple, start);
    BitString out;
    TableIndex table = start;
    for (SymbolIndex s : x) {
        check_symbol(tuple, s);
        out += tuple.code(table, s);
        table = tuple.next(table, s);
    }
    return out;
}

TableIndex next_table(const CodeTuple& tuple, TableIndex start, std::span<const SymbolIndex> x) {
    check_start(tuple, start);
    TableIndex table = start;
    for (SymbolIndex s : x) {
        check_symbol(tuple, s);
        table = tuple.next(table, s);
    }
    return table;
}

EncoderState::EncoderState(const CodeTuple& tuple, TableIndex current) : tuple_(&tuple), current_(current) {
    check_start(tuple, current);
}

std::pair<BitString, EncoderState> EncoderState::step(SymbolIndex s) const {
    check_symbol(*tuple_, s);
    return {tuple_->code(current_, s), EncoderState(*tuple_, tuple_->next(current_, s))};
}

} // namespace codetuple
