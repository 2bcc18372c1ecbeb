#include "codetuple/rotate.hpp"
#include "codetuple/delay.hpp"
#include "codetuple/error.hpp"
#include "codetuple/markov.hpp"
#include "codetuple/structure.hpp"

#include <algorithm>
#include <string>

namespace codetuple {

CodeTuple rotate(const CodeTuple& tuple) {
    const std::size_t m = tuple.size();
    std::vector<FirstBitSet> sets = first_bit_sets(tuple);
    std::vector<BitString> forced(m);
    for (TableIndex i = 0; i < m; ++i) {
        if (sets[i].empty())
            throw Error(Errc::NotExtendable, "table " + std::to_string(i) + " has no forced bit");
        if (!sets[i].full())
            forced[i] = to_bits(sets[i].zero ? ForcedBit::Zero : ForcedBit::One);
    }

    std::vector<CodeTable> tables(m);
    std::vector<std::vector<TableIndex>> transitions(m);
    for (TableIndex i = 0; i < m; ++i) {
        transitions[i] = tuple.transitions(i);
        for (SymbolIndex s = 0; s < tuple.sigma(); ++s) {
            BitString w = tuple.code(i, s) + forced[tuple.next(i, s)];
            tables[i].codewords.push_back(sets[i].full() ? std::move(w) : suffix_drop_first(w));
        }
    }
    return CodeTuple(tuple.alphabet_ptr(), std::move(tables), std::move(transitions));
}

RotationTrace rotation_trace(const CodeTuple& tuple, std::size_t max_steps) {
    RotationTrace trace;
    trace.steps.push_back(tuple);
    while (!is_fork(trace.steps.back())) {
        if (trace.steps.size() > max_steps)
            throw Error(Errc::InternalInvariantViolation,
                        "no fork tuple within " + std::to_string(max_steps) + " rotations");
        trace.steps.push_back(rotate(trace.steps.back()));
    }
    trace.fixpoint_index = trace.steps.size() - 1;
    return trace;
}

std::pair<CodeTuple, std::size_t> normalize_to_fork(const CodeTuple& tuple, std::size_t k,
                                                    NormalizeOptions options) {
    if (options.check_extendable && !is_extendable(tuple))
        throw Error(Errc::NotExtendable, "some table never emits a bit");
    if (options.check_decodable && !is_k_bit_delay_decodable(tuple, k))
        throw Error(Errc::NotKDec, "the tuple is not " + std::to_string(k) + "-bit delay decodable");

    std::size_t depth = 0;
    for (TableIndex i = 0; i < tuple.size(); ++i)
        depth = std::max(depth, fork_depth(tuple, i));

    CodeTuple current = tuple;
    std::size_t steps = 0;
    while (!is_fork(current)) {
        if (steps > depth)
            throw Error(Errc::InternalInvariantViolation,
                        "rotation did not reach a fork tuple within " + std::to_string(depth + 1) + " steps");
        current = rotate(current);
        ++steps;
    }
    return {std::move(current), steps};
}

CodeTuple reduce_1dec_to_0dec(const CodeTuple& tuple) {
    auto [fork, steps] = normalize_to_fork(tuple, 1);
    (void)steps;
    if (!all_tables_prefix_free(fork))
        throw Error(Errc::InternalInvariantViolation, "fork tuple obtained from a 1-bit delay tuple is not prefix-free");
    return fork;
}

CodeTuple best_single_table(const CodeTuple& tuple, const Distribution& mu) {
    if (!is_regular(tuple, mu))
        throw Error(Errc::NotRegular, "the stationary equations do not have a unique solution");
    const auto lengths = table_lengths(tuple, mu);
    const auto best = std::min_element(lengths.begin(), lengths.end()) - lengths.begin();
    return single_table_tuple(tuple.alphabet_ptr(), tuple.table(static_cast<TableIndex>(best)));
}

} // namespace codetuple
