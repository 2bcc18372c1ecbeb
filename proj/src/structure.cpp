#include "codetuple/structure.hpp"
#include "codetuple/error.hpp"

#include "packed.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace codetuple {

std::string to_string(const FirstBitSet& set) {
    if (set.full())
        return "{0,1}";
    if (set.zero)
        return "{0}";
    if (set.one)
        return "{1}";
    return "{}";
}

BitString to_bits(ForcedBit bit) {
    switch (bit) {
    case ForcedBit::Zero: return BitString::parse("0");
    case ForcedBit::One: return BitString::parse("1");
    case ForcedBit::Lambda: break;
    }
    return {};
}

namespace {

void check_table(const CodeTuple& tuple, TableIndex i) {
    if (i >= tuple.size())
        throw Error(Errc::IndexOutOfRange,
                    "table " + std::to_string(i) + " is outside [" + std::to_string(tuple.size()) + "]");
}

// Tables reachable from i through symbols with empty codewords, i included.
std::vector<char> lambda_closure(const CodeTuple& tuple, TableIndex i) {
    std::vector<char> seen(tuple.size(), 0);
    std::vector<TableIndex> stack{i};
    seen[i] = 1;
    while (!stack.empty()) {
        TableIndex j = stack.back();
        stack.pop_back();
        for (SymbolIndex s = 0; s < tuple.sigma(); ++s) {
            if (!tuple.code(j, s).empty())
                continue;
            TableIndex t = tuple.next(j, s);
            if (!seen[t]) {
                seen[t] = 1;
                stack.push_back(t);
            }
        }
    }
    return seen;
}

} // namespace

FirstBitSet first_bit_set(const CodeTuple& tuple, TableIndex i) {
    check_table(tuple, i);
    FirstBitSet out;
    const auto reach = lambda_closure(tuple, i);
    for (TableIndex j = 0; j < tuple.size(); ++j) {
        if (!reach[j])
            continue;
        for (SymbolIndex s = 0; s < tuple.sigma(); ++s) {
            const BitString& w = tuple.code(j, s);
            if (w.empty())
                continue;
            (w.front() ? out.one : out.zero) = true;
        }
    }
    return out;
}

std::vector<FirstBitSet> first_bit_sets(const CodeTuple& tuple) {
    std::vector<FirstBitSet> out;
    out.reserve(tuple.size());
    for (TableIndex i = 0; i < tuple.size(); ++i)
        out.push_back(first_bit_set(tuple, i));
    return out;
}

ForcedBit forced_bit(const CodeTuple& tuple, TableIndex i) {
    const FirstBitSet p = first_bit_set(tuple, i);
    if (p.empty())
        throw Error(Errc::UndefinedForcedBit, "table " + std::to_string(i) + " never emits a bit");
    if (p.full())
        return ForcedBit::Lambda;
    return p.zero ? ForcedBit::Zero : ForcedBit::One;
}

bool is_extendable(const CodeTuple& tuple) {
    // Tables with a non-empty codeword, then backwards over λ-edges.
    const std::size_t m = tuple.size();
    std::vector<char> emits(m, 0);
    std::vector<TableIndex> stack;
    for (TableIndex i = 0; i < m; ++i) {
        for (SymbolIndex s = 0; s < tuple.sigma(); ++s) {
            if (!tuple.code(i, s).empty()) {
                emits[i] = 1;
                stack.push_back(i);
                break;
            }
        }
    }
    if (stack.size() == m)
        return true;
    std::vector<std::vector<TableIndex>> preds(m);
    for (TableIndex i = 0; i < m; ++i)
        for (SymbolIndex s = 0; s < tuple.sigma(); ++s)
            if (tuple.code(i, s).empty())
                preds[tuple.next(i, s)].push_back(i);
    while (!stack.empty()) {
        TableIndex j = stack.back();
        stack.pop_back();
        for (TableIndex p : preds[j]) {
            if (!emits[p]) {
                emits[p] = 1;
                stack.push_back(p);
            }
        }
    }
    return std::all_of(emits.begin(), emits.end(), [](char c) { return c != 0; });
}

bool is_fork(const CodeTuple& tuple) {
    for (TableIndex i = 0; i < tuple.size(); ++i)
        if (!first_bit_set(tuple, i).full())
            return false;
    return true;
}

std::size_t default_fork_budget(const CodeTuple& tuple) {
    return std::max<std::size_t>(tuple.max_codeword_length(), 1) * tuple.size() * 4;
}

std::size_t fork_depth(const CodeTuple& tuple, TableIndex i, std::optional<std::size_t> budget) {
    using detail::Packed;
    check_table(tuple, i);
    const detail::CompiledTuple ct(tuple);
    const std::size_t limit = budget.value_or(default_fork_budget(tuple));

    std::vector<std::vector<char>> closure(tuple.size());
    for (TableIndex j = 0; j < tuple.size(); ++j)
        closure[j] = lambda_closure(tuple, j);

    // A live parse: the table it sits at and the bits of its current codeword
    // still ahead of the walk. Pending bits are emitted before the table acts.
    using Config = std::pair<std::uint32_t, std::uint64_t>;
    auto encode_config = [](std::uint32_t table, Packed pending) { return Config{table, pending.key()}; };
    auto decode_pending = [](std::uint64_t key) {
        std::uint32_t len = 0;
        while (((std::uint64_t{1} << (len + 1)) - 1) <= key)
            ++len;
        return Packed{key - ((std::uint64_t{1} << len) - 1), len};
    };

    std::vector<Config> live{encode_config(static_cast<std::uint32_t>(i), Packed{})};
    std::set<std::vector<Config>> history;

    for (std::size_t depth = 0;; ++depth) {
        FirstBitSet next;
        for (const auto& [table, key] : live) {
            const Packed pending = decode_pending(key);
            if (!pending.empty()) {
                (pending.first() ? next.one : next.zero) = true;
                continue;
            }
            const FirstBitSet p = first_bit_set(tuple, table);
            next.zero = next.zero || p.zero;
            next.one = next.one || p.one;
        }
        if (next.full())
            return depth;
        if (next.empty()) {
            if (depth == 0)
                throw Error(Errc::UndefinedForcedBit, "table " + std::to_string(i) + " never emits a bit");
            throw Error(Errc::NoForkFound,
                        "every output from table " + std::to_string(i) + " is a prefix of one finite string");
        }
        if (depth >= limit)
            throw Error(Errc::NoForkFound, "no branch within " + std::to_string(limit) + " bits");
        if (!history.insert(live).second)
            throw Error(Errc::NoForkFound, "the outputs from table " + std::to_string(i) +
                                               " form a single infinite path");

        const bool bit = next.one;
        std::vector<Config> advanced;
        for (const auto& [table, key] : live) {
            const Packed pending = decode_pending(key);
            if (!pending.empty()) {
                if (pending.first() == bit)
                    advanced.push_back(encode_config(table, pending.drop(1)));
                continue;
            }
            for (TableIndex j = 0; j < tuple.size(); ++j) {
                if (!closure[table][j])
                    continue;
                for (SymbolIndex s = 0; s < tuple.sigma(); ++s) {
                    const Packed w = ct.code(j, s);
                    if (!w.empty() && w.first() == bit)
                        advanced.push_back(encode_config(ct.next(j, s), w.drop(1)));
                }
            }
        }
        std::sort(advanced.begin(), advanced.end());
        advanced.erase(std::unique(advanced.begin(), advanced.end()), advanced.end());
        live = std::move(advanced);
    }
}

bool is_prefix_free(const CodeTable& table) {
    for (std::size_t a = 0; a < table.size(); ++a)
        for (std::size_t b = 0; b < table.size(); ++b)
            if (a != b && is_prefix(table[a], table[b]))
                return false;
    return true;
}

bool all_tables_prefix_free(const CodeTuple& tuple) {
    for (const auto& t : tuple.tables())
        if (!is_prefix_free(t))
            return false;
    return true;
}

} // namespace codetuple
