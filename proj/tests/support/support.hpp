#pragma once

// Fixture loading and brute-force oracles shared by the test binaries. The
// oracles deliberately avoid the library's analysis code and work from
// encode_star and plain enumeration only.

#include "codetuple/alphabet.hpp"
#include "codetuple/code_tuple.hpp"
#include "codetuple/encode.hpp"
#include "codetuple/error.hpp"
#include "codetuple/explore.hpp"
#include "codetuple/io.hpp"
#include "codetuple/rational.hpp"
#include "codetuple/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace support {

using namespace codetuple;

inline std::string fixture_path(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name;
}

inline CodeTuple load_tuple(const std::string& name) {
    return tuple_from_json(load_json_argument(fixture_path(name + ".json")));
}

inline Distribution load_dist(const std::string& name, const CodeTuple& tuple) {
    return distribution_from_json(load_json_argument(fixture_path(name + ".json")), tuple.alphabet_ptr());
}

inline BitString bits(const char* text) {
    return BitString::parse(text);
}

inline Rational q(const char* text) {
    return parse_rational(text);
}

inline SymbolSeq seq(const CodeTuple& tuple, const std::string& text) {
    return tuple.alphabet().parse_sequence(text);
}

inline Distribution dist(std::vector<const char*> probs) {
    auto a = std::make_shared<const Alphabet>(Alphabet::letters(probs.size()));
    std::vector<Rational> p;
    for (const char* t : probs)
        p.push_back(parse_rational(t));
    return Distribution(a, std::move(p));
}

/// Calls f on every sequence over [sigma] of length 0..max_len, by length
/// then lexicographically.
inline void for_each_sequence(std::size_t sigma, std::size_t max_len, const std::function<void(const SymbolSeq&)>& f) {
    std::vector<SymbolSeq> level{SymbolSeq{}};
    f(level.front());
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<SymbolSeq> grown;
        for (const auto& x : level) {
            for (SymbolIndex s = 0; s < sigma; ++s) {
                SymbolSeq y = x;
                y.push_back(s);
                f(y);
                grown.push_back(std::move(y));
            }
        }
        level = std::move(grown);
    }
}

/// First bits of all non-empty outputs f*_i(x) with |x| <= depth.
inline FirstBitSet brute_first_bits(const CodeTuple& tuple, TableIndex i, std::size_t depth) {
    FirstBitSet out;
    for_each_sequence(tuple.sigma(), depth, [&](const SymbolSeq& x) {
        const BitString o = encode_star(tuple, i, x);
        if (!o.empty())
            (o.front() ? out.one : out.zero) = true;
    });
    return out;
}

/// k-bit prefixes of outputs f*_j(y), |y| <= depth.
inline std::set<BitString> brute_follow(const CodeTuple& tuple, TableIndex j, std::size_t k, std::size_t depth) {
    std::set<BitString> out;
    for_each_sequence(tuple.sigma(), depth, [&](const SymbolSeq& y) {
        const BitString o = encode_star(tuple, j, y);
        if (o.size() >= k)
            out.insert(o.substr(0, k));
    });
    return out;
}

/// Minimum of sum l_s mu_s over length vectors with every l_s in 1..max_len
/// and sum 2^-l_s <= 1, which by Kraft's inequality are exactly the length
/// vectors of prefix-free tables without empty codewords.
inline Rational exhaustive_prefix_code_length(const Distribution& mu, std::size_t max_len) {
    const std::size_t sigma = mu.size();
    std::vector<std::size_t> lengths(sigma, 1);
    std::optional<Rational> best;
    for (;;) {
        Rational kraft = 0;
        Rational cost = 0;
        for (std::size_t s = 0; s < sigma; ++s) {
            kraft += Rational(1, boost::multiprecision::cpp_int(1) << lengths[s]);
            cost += mu[s] * static_cast<long long>(lengths[s]);
        }
        if (kraft <= 1 && (!best || cost < *best))
            best = cost;
        std::size_t pos = 0;
        while (pos < sigma && lengths[pos] == max_len)
            lengths[pos++] = 1;
        if (pos == sigma)
            break;
        ++lengths[pos];
    }
    return *best;
}

/// Unique stationary distribution exists iff the transition graph has exactly
/// one closed strongly connected class (every edge has positive weight).
inline bool graph_regular(const CodeTuple& tuple) {
    const std::size_t m = tuple.size();
    std::vector<std::vector<char>> reach(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        reach[i][i] = 1;
        for (SymbolIndex s = 0; s < tuple.sigma(); ++s)
            reach[i][tuple.next(i, s)] = 1;
    }
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (reach[i][k] && reach[k][j])
                    reach[i][j] = 1;
    std::set<std::vector<char>> closed;
    for (std::size_t i = 0; i < m; ++i) {
        bool is_closed = true;
        for (std::size_t j = 0; j < m; ++j)
            if (reach[i][j] && !reach[j][i])
                is_closed = false;
        if (is_closed)
            closed.insert(reach[i]);
    }
    return closed.size() == 1;
}

/// All sequences x' with |x'| <= depth whose output from table i is
/// comparable with `bits` (so they remain plausible parses).
inline std::vector<SymbolSeq> brute_parses(const CodeTuple& tuple, TableIndex i, const BitString& b, std::size_t depth) {
    std::vector<SymbolSeq> out;
    for_each_sequence(tuple.sigma(), depth, [&](const SymbolSeq& x) {
        if (is_prefix(b, encode_star(tuple, i, x)))
            out.push_back(x);
    });
    return out;
}

inline bool starts_with(const SymbolSeq& a, const SymbolSeq& prefix) {
    return prefix.size() <= a.size() && std::equal(prefix.begin(), prefix.end(), a.begin());
}

} // namespace support
