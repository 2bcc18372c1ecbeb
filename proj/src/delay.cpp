#include "codetuple/delay.hpp"
#include "codetuple/encode.hpp"
#include "codetuple/error.hpp"
#include "codetuple/structure.hpp"

#include "packed.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <utility>

namespace codetuple {

const char* to_string(PairClass c) noexcept {
    switch (c) {
    case PairClass::PositiveOnly: return "PositiveOnly";
    case PairClass::NegativeOnly: return "NegativeOnly";
    case PairClass::Both: return "Both";
    case PairClass::Neither: return "Neither";
    }
    return "?";
}

namespace {

using detail::CompiledTuple;
using detail::Packed;
using detail::PackedSet;

void check_table(const CodeTuple& tuple, TableIndex i) {
    if (i >= tuple.size())
        throw Error(Errc::IndexOutOfRange,
                    "table " + std::to_string(i) + " is outside [" + std::to_string(tuple.size()) + "]");
}

std::uint32_t check_lookahead(std::size_t k) {
    if (k > detail::max_packed_length)
        throw Error(Errc::LimitExceeded, "lookahead above " + std::to_string(detail::max_packed_length) +
                                             " bits is not supported");
    return static_cast<std::uint32_t>(k);
}

// All output prefixes of length <= k from each table (prefix-closed).
class FollowSets {
public:
    FollowSets(const CompiledTuple& ct, std::uint32_t k) : k_(k), sets_(k, ct.size()) {
        PackedSet seen(k, ct.size());
        std::vector<std::pair<std::size_t, Packed>> stack;
        for (std::size_t q = 0; q < ct.size(); ++q) {
            if (q > 0)
                seen.clear();
            build(ct, q, seen, stack);
        }
    }

    bool contains(std::size_t q, Packed c) const { return sets_.contains(q, c); }

    /// Lexicographically least c of length k with t ⪯ c, c ∈ follow(r), and
    /// c[|t|:] ∈ follow(q); requires |t| < k.
    std::optional<Packed> least_joint(std::size_t r, std::size_t q, Packed t) const {
        if (!contains(r, t))
            return std::nullopt;
        return descend(r, q, t, Packed{});
    }

    void collect(std::size_t q, Packed prefix, std::set<BitString>& out) const {
        if (!contains(q, prefix))
            return;
        if (prefix.len == k_) {
            out.insert(detail::unpack(prefix));
            return;
        }
        collect(q, prefix.append_bit(false), out);
        collect(q, prefix.append_bit(true), out);
    }

private:
    std::optional<Packed> descend(std::size_t r, std::size_t q, Packed c, Packed tail) const {
        if (c.len == k_)
            return c;
        for (bool b : {false, true}) {
            Packed c2 = c.append_bit(b);
            Packed tail2 = tail.append_bit(b);
            if (contains(r, c2) && contains(q, tail2))
                if (auto hit = descend(r, q, c2, tail2))
                    return hit;
        }
        return std::nullopt;
    }

    // seen holds visited (table, accumulated prefix) pairs of this walk.
    void build(const CompiledTuple& ct, std::size_t start, PackedSet& seen,
               std::vector<std::pair<std::size_t, Packed>>& stack) {
        sets_.insert(start, Packed{});
        if (k_ == 0)
            return;
        stack.assign(1, {start, Packed{}});
        seen.insert(start, Packed{});
        while (!stack.empty()) {
            auto [j, acc] = stack.back();
            stack.pop_back();
            for (std::size_t s = 0; s < ct.sigma(); ++s) {
                Packed w = ct.code(j, s);
                const std::uint32_t room = k_ - acc.len;
                if (w.len > room)
                    w = w.take(room);
                const Packed full = acc.append(w);
                for (std::uint32_t l = acc.len + 1; l <= full.len; ++l)
                    sets_.insert(start, full.take(l));
                if (full.len < k_) {
                    const std::size_t n = ct.next(j, s);
                    if (seen.insert(n, full))
                        stack.emplace_back(n, full);
                }
            }
        }
    }

    std::uint32_t k_;
    PackedSet sets_;
};

// Breadth-first search over competitor configurations.
class Automaton {
public:
    Automaton(const CompiledTuple& ct, std::uint32_t k)
        : ct_(ct), k_(k), follow_(ct, k), m_(ct.size()), tbits_(ct.lmax() + 1),
          lambda_seen_(ct.size() * (ct.lmax() + 1), 0), visited_(ct.lmax(), std::size_t{m_} * m_) {
        nodes_.reserve(64);
    }

    struct Node {
        std::uint32_t r;
        std::uint32_t q;
        Packed t;
        std::int64_t parent;
        std::uint32_t symbol;
        std::uint32_t start;
    };

    struct Failure {
        std::size_t node;
        Packed c;
    };

    std::optional<Failure> run() {
        std::vector<std::size_t> layer;
        for (std::uint32_t j0 = 0; j0 < m_; ++j0) {
            for (std::uint32_t s = 0; s < ct_.sigma(); ++s) {
                for (std::uint32_t s2 = 0; s2 < ct_.sigma(); ++s2) {
                    if (s2 == s)
                        continue;
                    results_.clear();
                    consume(ct_.next(j0, s2), ct_.code(j0, s2), ct_.code(j0, s));
                    for (const auto& [q, t] : results_)
                        add(Node{ct_.next(j0, s), q, t, -1, s, j0}, layer);
                }
            }
        }

        std::vector<std::size_t> next_layer;
        while (!layer.empty()) {
            explored_ += layer.size();
            if (auto f = first_failure(layer))
                return f;
            next_layer.clear();
            for (std::size_t idx : layer) {
                const Node node = nodes_[idx];
                for (std::uint32_t s = 0; s < ct_.sigma(); ++s) {
                    results_.clear();
                    consume(node.q, node.t, ct_.code(node.r, s));
                    for (const auto& [q, t] : results_)
                        add(Node{ct_.next(node.r, s), q, t, static_cast<std::int64_t>(idx), s, node.start},
                            next_layer);
                }
            }
            std::swap(layer, next_layer);
        }
        return std::nullopt;
    }

    const Node& node(std::size_t idx) const { return nodes_[idx]; }
    std::size_t explored() const noexcept { return explored_; }

private:
    void add(const Node& n, std::vector<std::size_t>& layer) {
        if (!visited_.insert(std::size_t{n.r} * m_ + n.q, n.t))
            return;
        layer.push_back(nodes_.size());
        nodes_.push_back(n);
    }

    // Competitor at q holding surplus t absorbs reference emission p.
    void consume(std::uint32_t q, Packed t, Packed p) {
        if (t.len >= p.len) {
            if (detail::is_prefix(p, t))
                results_.emplace_back(q, t.drop(p.len));
            return;
        }
        if (!detail::is_prefix(t, p))
            return;
        std::fill(lambda_seen_.begin(), lambda_seen_.end(), 0);
        extend(q, p.drop(t.len));
    }

    // Competitor with no surplus must produce `rest` (non-empty).
    void extend(std::uint32_t q, Packed rest) {
        auto& seen = lambda_seen_[q * tbits_ + rest.len];
        if (seen)
            return;
        seen = 1;
        for (std::uint32_t s = 0; s < ct_.sigma(); ++s) {
            const Packed w = ct_.code(q, s);
            const std::uint32_t n = ct_.next(q, s);
            if (w.len >= rest.len) {
                if (detail::is_prefix(rest, w))
                    results_.emplace_back(n, w.drop(rest.len));
            } else if (detail::is_prefix(w, rest)) {
                extend(n, rest.drop(w.len));
            }
        }
    }

    std::optional<Packed> conflict(const Node& n) const {
        if (n.t.len >= k_) {
            const Packed c = n.t.take(k_);
            if (follow_.contains(n.r, c))
                return c;
            return std::nullopt;
        }
        return follow_.least_joint(n.r, n.q, n.t);
    }

    static bool same_path(const Node& a, const Node& b) {
        return a.parent == b.parent && a.symbol == b.symbol && a.start == b.start;
    }

    std::optional<Failure> first_failure(const std::vector<std::size_t>& layer) const {
        for (std::size_t pos = 0; pos < layer.size(); ++pos) {
            auto c = conflict(nodes_[layer[pos]]);
            if (!c)
                continue;
            Failure best{layer[pos], *c};
            for (std::size_t p2 = pos + 1; p2 < layer.size(); ++p2) {
                if (!same_path(nodes_[layer[p2]], nodes_[layer[pos]]))
                    break;
                auto c2 = conflict(nodes_[layer[p2]]);
                if (c2 && detail::unpack(*c2) < detail::unpack(best.c))
                    best = Failure{layer[p2], *c2};
            }
            return best;
        }
        return std::nullopt;
    }

    const CompiledTuple& ct_;
    std::uint32_t k_;
    FollowSets follow_;
    std::uint32_t m_;
    std::uint32_t tbits_;
    std::vector<char> lambda_seen_;
    PackedSet visited_;
    std::vector<Node> nodes_;
    std::vector<std::pair<std::uint32_t, Packed>> results_;
    std::size_t explored_ = 0;
};

// Shortest y with bits ⪯ f*_q(y).
std::optional<SymbolSeq> find_extension(const CodeTuple& tuple, TableIndex q, const BitString& bits) {
    if (bits.empty())
        return SymbolSeq{};
    const std::size_t n = bits.size();
    const std::size_t m = tuple.size();
    struct Step {
        std::int64_t parent;
        SymbolIndex symbol;
    };
    std::vector<std::int64_t> state_of(m * n, -1);
    std::vector<Step> steps;
    std::vector<std::pair<TableIndex, std::size_t>> at;
    std::deque<std::size_t> queue;

    steps.push_back({-1, 0});
    at.emplace_back(q, 0);
    state_of[q * n] = 0;
    queue.push_back(0);

    auto unwind = [&](std::size_t idx, SymbolIndex last) {
        SymbolSeq y{last};
        for (std::int64_t cur = static_cast<std::int64_t>(idx); steps[cur].parent >= 0; cur = steps[cur].parent)
            y.push_back(steps[cur].symbol);
        std::reverse(y.begin(), y.end());
        return y;
    };

    while (!queue.empty()) {
        const std::size_t idx = queue.front();
        queue.pop_front();
        const auto [j, off] = at[idx];
        for (SymbolIndex s = 0; s < tuple.sigma(); ++s) {
            const BitString& w = tuple.code(j, s);
            const std::size_t remaining = n - off;
            if (w.size() >= remaining) {
                if (std::equal(bits.str().begin() + static_cast<std::ptrdiff_t>(off), bits.str().end(),
                               w.str().begin()))
                    return unwind(idx, s);
                continue;
            }
            if (!std::equal(w.str().begin(), w.str().end(),
                            bits.str().begin() + static_cast<std::ptrdiff_t>(off)))
                continue;
            const TableIndex nj = tuple.next(j, s);
            const std::size_t noff = off + w.size();
            if (state_of[nj * n + noff] >= 0)
                continue;
            state_of[nj * n + noff] = static_cast<std::int64_t>(steps.size());
            steps.push_back({static_cast<std::int64_t>(idx), s});
            at.emplace_back(nj, noff);
            queue.push_back(steps.size() - 1);
        }
    }
    return std::nullopt;
}

// Some x' with f*_i(x) c ⪯ f*_i(x') and x not a prefix of x'. Competitors
// are carried along x as (table, surplus) with the symbols they used.
std::optional<SymbolSeq> find_diverging(const CodeTuple& tuple, TableIndex i, std::span<const SymbolIndex> x,
                                        const BitString& c) {
    using Configs = std::map<std::pair<TableIndex, BitString>, SymbolSeq>;

    // Competitor at q with surplus t absorbs p; results keyed by new state.
    auto consume = [&](TableIndex q, const BitString& t, const SymbolSeq& path, const BitString& p, Configs& out) {
        if (t.size() >= p.size()) {
            if (is_prefix(p, t))
                out.try_emplace({q, t.substr(p.size())}, path);
            return;
        }
        if (!is_prefix(t, p))
            return;
        std::set<std::pair<TableIndex, std::size_t>> seen;
        auto extend = [&](auto& self, TableIndex j, std::size_t off, SymbolSeq& cur) -> void {
            if (!seen.insert({j, off}).second)
                return;
            const std::size_t remaining = p.size() - off;
            for (SymbolIndex s = 0; s < tuple.sigma(); ++s) {
                const BitString& w = tuple.code(j, s);
                cur.push_back(s);
                if (w.size() >= remaining) {
                    if (is_prefix(p.substr(off), w))
                        out.try_emplace({tuple.next(j, s), w.substr(remaining)}, cur);
                } else if (is_prefix(w, p.substr(off, w.size()))) {
                    self(self, tuple.next(j, s), off + w.size(), cur);
                }
                cur.pop_back();
            }
        };
        SymbolSeq cur = path;
        extend(extend, q, t.size(), cur);
    };

    TableIndex r = i;
    Configs live;
    for (std::size_t pos = 0; pos < x.size(); ++pos) {
        const SymbolIndex s = x[pos];
        const BitString& p = tuple.code(r, s);
        Configs advanced;
        for (const auto& [state, path] : live)
            consume(state.first, state.second, path, p, advanced);
        SymbolSeq base(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(pos));
        for (SymbolIndex s2 = 0; s2 < tuple.sigma(); ++s2) {
            if (s2 == s)
                continue;
            SymbolSeq path = base;
            path.push_back(s2);
            consume(tuple.next(r, s2), tuple.code(r, s2), path, p, advanced);
        }
        live = std::move(advanced);
        r = tuple.next(r, s);
    }

    for (const auto& [state, path] : live) {
        const auto& [q, t] = state;
        if (t.size() >= c.size()) {
            if (is_prefix(c, t))
                return path;
            continue;
        }
        if (!is_prefix(t, c))
            continue;
        if (auto v = find_extension(tuple, q, c.substr(t.size()))) {
            SymbolSeq out = path;
            out.insert(out.end(), v->begin(), v->end());
            return out;
        }
    }

    // A proper prefix of x already producing all of f*_i(x).
    if (c.empty()) {
        std::size_t cut = x.size();
        TableIndex j = i;
        std::vector<TableIndex> tables{i};
        for (SymbolIndex s : x)
            tables.push_back(j = tuple.next(j, s));
        while (cut > 0 && tuple.code(tables[cut - 1], x[cut - 1]).empty())
            --cut;
        if (cut < x.size())
            return SymbolSeq(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(cut));
    }
    return std::nullopt;
}

SymbolSeq concat(const SymbolSeq& a, const SymbolSeq& b) {
    SymbolSeq out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

} // namespace

std::set<BitString> follow_set(const CodeTuple& tuple, TableIndex j, std::size_t k) {
    check_table(tuple, j);
    const CompiledTuple ct(tuple);
    const FollowSets follow(ct, check_lookahead(k));
    std::set<BitString> out;
    follow.collect(j, Packed{}, out);
    return out;
}

bool is_k_bit_delay_decodable(const CodeTuple& tuple, std::size_t k) {
    const std::uint32_t kk = check_lookahead(k);
    if (k == 0)
        return all_tables_prefix_free(tuple);
    const CompiledTuple ct(tuple);
    Automaton automaton(ct, kk);
    return !automaton.run().has_value();
}

DecodabilityResult check_k_bit_delay(const CodeTuple& tuple, std::size_t k) {
    const CompiledTuple ct(tuple);
    Automaton automaton(ct, check_lookahead(k));
    const bool prefix_free = k == 0 && all_tables_prefix_free(tuple);
    DecodabilityResult result;
    auto failure = prefix_free ? std::nullopt : automaton.run();
    result.configs_explored = automaton.explored();
    if (!failure) {
        if (k == 0 && !prefix_free)
            throw Error(Errc::InternalInvariantViolation, "a table is not prefix-free but no witness was found");
        return result;
    }

    DelayWitness w;
    std::size_t idx = failure->node;
    const auto& last = automaton.node(idx);
    w.start = last.start;
    for (std::int64_t cur = static_cast<std::int64_t>(idx); cur >= 0; cur = automaton.node(cur).parent)
        w.x.push_back(automaton.node(cur).symbol);
    std::reverse(w.x.begin(), w.x.end());
    w.lookahead = detail::unpack(failure->c);

    auto ext = find_extension(tuple, last.r, w.lookahead);
    auto div = find_diverging(tuple, w.start, w.x, w.lookahead);
    if (!ext || !div)
        throw Error(Errc::InternalInvariantViolation, "failing configuration has no concrete witness");
    w.extending = concat(w.x, *ext);
    w.diverging = std::move(*div);
    if (!validate_witness(tuple, w))
        throw Error(Errc::InternalInvariantViolation, "constructed witness does not validate");
    result.decodable = false;
    result.witness = std::move(w);
    return result;
}

PairClass classify_pair(const CodeTuple& tuple, TableIndex i, std::span<const SymbolIndex> x, const BitString& c) {
    const TableIndex r = next_table(tuple, i, x);
    const bool extending = find_extension(tuple, r, c).has_value();
    const bool diverging = find_diverging(tuple, i, x, c).has_value();
    if (extending && diverging)
        return PairClass::Neither;
    if (extending)
        return PairClass::PositiveOnly;
    if (diverging)
        return PairClass::NegativeOnly;
    return PairClass::Both;
}

bool validate_witness(const CodeTuple& tuple, const DelayWitness& w) {
    if (w.start >= tuple.size())
        return false;
    for (const auto* seq : {&w.x, &w.extending, &w.diverging})
        for (SymbolIndex s : *seq)
            if (s >= tuple.sigma())
                return false;
    auto starts_with = [](const SymbolSeq& a, const SymbolSeq& b) {
        return b.size() <= a.size() && std::equal(b.begin(), b.end(), a.begin());
    };
    if (!starts_with(w.extending, w.x) || starts_with(w.diverging, w.x))
        return false;
    const BitString target = encode_star(tuple, w.start, w.x) + w.lookahead;
    return is_prefix(target, encode_star(tuple, w.start, w.extending)) &&
           is_prefix(target, encode_star(tuple, w.start, w.diverging));
}

std::optional<DelayWitness> brute_force_refute(const CodeTuple& tuple, std::size_t k, std::size_t max_len,
                                               std::optional<std::size_t> max_competitor_len) {
    const std::size_t comp_len = max_competitor_len.value_or(2 * max_len);
    const std::size_t sigma = tuple.sigma();

    struct Entry {
        BitString out;
        SymbolSeq seq;
    };
    auto enumerate = [&](TableIndex i, std::size_t depth) {
        std::vector<Entry> all;
        std::vector<Entry> frontier{{BitString{}, SymbolSeq{}}};
        std::vector<TableIndex> at{i};
        all.push_back(frontier.front());
        for (std::size_t d = 0; d < depth; ++d) {
            std::vector<Entry> grown;
            std::vector<TableIndex> grown_at;
            for (std::size_t e = 0; e < frontier.size(); ++e) {
                for (SymbolIndex s = 0; s < sigma; ++s) {
                    Entry n{frontier[e].out + tuple.code(at[e], s), frontier[e].seq};
                    n.seq.push_back(s);
                    grown_at.push_back(tuple.next(at[e], s));
                    grown.push_back(std::move(n));
                }
            }
            frontier = std::move(grown);
            at = std::move(grown_at);
            all.insert(all.end(), frontier.begin(), frontier.end());
        }
        return all;
    };

    std::vector<std::vector<Entry>> competitors;
    std::vector<std::vector<Entry>> references;
    for (TableIndex i = 0; i < tuple.size(); ++i) {
        auto comp = enumerate(i, comp_len);
        std::stable_sort(comp.begin(), comp.end(), [](const Entry& a, const Entry& b) { return a.out < b.out; });
        competitors.push_back(std::move(comp));
        // Enumeration is by length then lexicographic within each length.
        references.push_back(enumerate(i, max_len));
    }

    auto starts_with = [](const SymbolSeq& a, const SymbolSeq& b) {
        return b.size() <= a.size() && std::equal(b.begin(), b.end(), a.begin());
    };

    for (std::size_t len = 0; len <= max_len; ++len) {
        for (TableIndex i = 0; i < tuple.size(); ++i) {
            for (const Entry& ref : references[i]) {
                if (ref.seq.size() != len)
                    continue;
                std::map<BitString, const SymbolSeq*> pos;
                std::map<BitString, const SymbolSeq*> neg;
                const auto& comp = competitors[i];
                auto it = std::lower_bound(comp.begin(), comp.end(), ref.out,
                                           [](const Entry& e, const BitString& o) { return e.out < o; });
                for (; it != comp.end() && is_prefix(ref.out, it->out); ++it) {
                    if (it->out.size() < ref.out.size() + k)
                        continue;
                    BitString c = it->out.substr(ref.out.size(), k);
                    auto& side = starts_with(it->seq, ref.seq) ? pos : neg;
                    side.try_emplace(std::move(c), &it->seq);
                }
                for (const auto& [c, ext] : pos) {
                    auto d = neg.find(c);
                    if (d == neg.end())
                        continue;
                    return DelayWitness{i, ref.seq, c, *ext, *d->second};
                }
            }
        }
    }
    return std::nullopt;
}

SymbolSeq decode(const CodeTuple& tuple, TableIndex i, const BitString& bits, std::size_t k) {
    check_table(tuple, i);
    const CompiledTuple ct(tuple);
    const std::uint32_t kk = check_lookahead(k);
    const FollowSets follow(ct, kk);
    const std::size_t n = bits.size();

    SymbolSeq out;
    TableIndex j = i;
    std::size_t pos = 0;
    std::size_t lambda_run = 0;
    for (;;) {
        std::optional<SymbolIndex> certified;
        bool waiting = false;
        for (SymbolIndex s = 0; s < tuple.sigma(); ++s) {
            const BitString& w = tuple.code(j, s);
            if (pos + w.size() > n) {
                if (std::equal(bits.str().begin() + static_cast<std::ptrdiff_t>(pos), bits.str().end(),
                               w.str().begin()))
                    waiting = true;
                continue;
            }
            if (!std::equal(w.str().begin(), w.str().end(), bits.str().begin() + static_cast<std::ptrdiff_t>(pos)))
                continue;
            if (pos + w.size() + k > n) {
                waiting = true;
                continue;
            }
            const BitString c = bits.substr(pos + w.size(), k);
            if (!follow.contains(tuple.next(j, s), detail::pack(c)))
                continue;
            if (certified)
                throw Error(Errc::NotDecodable, "symbols \"" + tuple.alphabet().name(*certified) + "\" and \"" +
                                                    tuple.alphabet().name(s) + "\" both fit at bit " +
                                                    std::to_string(pos));
            certified = s;
        }
        if (!certified) {
            if (waiting)
                return out;
            throw Error(Errc::InvalidStream, "no parse continues at bit " + std::to_string(pos));
        }
        const BitString& w = tuple.code(j, *certified);
        if (w.empty()) {
            if (++lambda_run > tuple.size())
                throw Error(Errc::NotDecodable, "decoder cycles on empty codewords at bit " + std::to_string(pos));
        } else {
            lambda_run = 0;
        }
        out.push_back(*certified);
        pos += w.size();
        j = tuple.next(j, *certified);
    }
}

} // namespace codetuple
