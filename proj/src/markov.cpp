#include "codetuple/markov.hpp"
#include "codetuple/error.hpp"

#include <string>
#include <utility>

namespace codetuple {

namespace {

void check_alphabet(const CodeTuple& tuple, const Distribution& mu) {
    if (!(tuple.alphabet() == mu.alphabet()))
        throw Error(Errc::AlphabetMismatch, "distribution and code-tuple use different alphabets");
}

// Row echelon form in place; returns the pivot columns.
std::vector<std::size_t> eliminate(RationalMatrix& a) {
    std::vector<std::size_t> pivots;
    if (a.empty())
        return pivots;
    const std::size_t rows = a.size();
    const std::size_t cols = a.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pick = row;
        while (pick < rows && a[pick][col] == 0)
            ++pick;
        if (pick == rows)
            continue;
        std::swap(a[row], a[pick]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (a[r][col] == 0)
                continue;
            const Rational factor = a[r][col] / a[row][col];
            for (std::size_t c = col; c < cols; ++c)
                a[r][c] -= factor * a[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Rows of (Q^T - I) followed by the all-ones row.
RationalMatrix stationary_system(const CodeTuple& tuple, const Distribution& mu) {
    const RationalMatrix q = transition_matrix(tuple, mu);
    const std::size_t m = q.size();
    RationalMatrix a(m + 1, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            a[i][j] = q[j][i] - (i == j ? 1 : 0);
    for (std::size_t j = 0; j < m; ++j)
        a[m][j] = 1;
    return a;
}

using Wide = __int128;
constexpr Wide wide_limit = Wide{1} << 62;

// Fraction-free elimination; nullopt when an entry grows past wide_limit.
std::optional<std::size_t> integer_rank(std::vector<std::vector<Wide>> a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a.front().size();
    std::size_t rank = 0;
    Wide prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pick = rank;
        while (pick < rows && a[pick][col] == 0)
            ++pick;
        if (pick == rows)
            continue;
        std::swap(a[rank], a[pick]);
        const Wide pivot = a[rank][col];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const Wide lead = a[r][col];
            for (std::size_t c = col + 1; c < cols; ++c) {
                const Wide v = (pivot * a[r][c] - lead * a[rank][c]) / prev;
                if (v >= wide_limit || v <= -wide_limit)
                    return std::nullopt;
                a[r][c] = v;
            }
            a[r][col] = 0;
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

// D * (Q^T - I) with the all-ones row, D the common denominator of mu.
std::optional<std::vector<std::vector<Wide>>> scaled_system(const CodeTuple& tuple, const Distribution& mu) {
    using boost::multiprecision::cpp_int;
    cpp_int common = 1;
    for (const auto& p : mu.probs())
        common = boost::multiprecision::lcm(common, cpp_int(boost::multiprecision::denominator(p)));
    if (common >= (cpp_int(1) << 24))
        return std::nullopt;
    const auto d = common.convert_to<long long>();
    std::vector<Wide> weight;
    for (const auto& p : mu.probs())
        weight.push_back(Wide{(cpp_int(boost::multiprecision::numerator(p)) * d /
                               cpp_int(boost::multiprecision::denominator(p)))
                                  .convert_to<long long>()});
    const std::size_t m = tuple.size();
    std::vector<std::vector<Wide>> a(m + 1, std::vector<Wide>(m, 0));
    for (TableIndex i = 0; i < m; ++i) {
        a[i][i] -= d;
        for (SymbolIndex s = 0; s < tuple.sigma(); ++s)
            a[tuple.next(i, s)][i] += weight[s];
    }
    for (std::size_t j = 0; j < m; ++j)
        a[m][j] = 1;
    return a;
}

} // namespace

RationalMatrix transition_matrix(const CodeTuple& tuple, const Distribution& mu) {
    check_alphabet(tuple, mu);
    const std::size_t m = tuple.size();
    RationalMatrix q(m, std::vector<Rational>(m));
    for (TableIndex i = 0; i < m; ++i)
        for (SymbolIndex s = 0; s < tuple.sigma(); ++s)
            q[i][tuple.next(i, s)] += mu[s];
    return q;
}

std::size_t exact_rank(RationalMatrix a) {
    return eliminate(a).size();
}

std::optional<std::vector<Rational>> solve_unique(RationalMatrix a, std::vector<Rational> b) {
    if (a.size() != b.size())
        throw Error(Errc::InternalInvariantViolation, "system has mismatched row counts");
    if (a.empty())
        return std::vector<Rational>{};
    const std::size_t cols = a.front().size();
    for (std::size_t r = 0; r < a.size(); ++r)
        a[r].push_back(b[r]);
    const auto pivots = eliminate(a);
    if (!pivots.empty() && pivots.back() == cols)
        return std::nullopt;
    if (pivots.size() != cols)
        return std::nullopt;
    std::vector<Rational> x(cols);
    for (std::size_t r = cols; r-- > 0;) {
        Rational acc = a[r][cols];
        for (std::size_t c = r + 1; c < cols; ++c)
            acc -= a[r][c] * x[c];
        x[r] = acc / a[r][r];
    }
    return x;
}

bool is_regular(const CodeTuple& tuple, const Distribution& mu) {
    check_alphabet(tuple, mu);
    if (auto scaled = scaled_system(tuple, mu))
        if (auto rank = integer_rank(std::move(*scaled)))
            return *rank == tuple.size();
    return exact_rank(stationary_system(tuple, mu)) == tuple.size();
}

std::vector<Rational> stationary(const CodeTuple& tuple, const Distribution& mu) {
    const std::size_t m = tuple.size();
    std::vector<Rational> b(m + 1);
    b[m] = 1;
    auto pi = solve_unique(stationary_system(tuple, mu), std::move(b));
    if (!pi)
        throw Error(Errc::NotRegular, "the stationary equations do not have a unique solution");
    for (const auto& v : *pi)
        if (v < 0)
            throw Error(Errc::InternalInvariantViolation, "stationary distribution has a negative entry");
    return *pi;
}

Rational table_length(const CodeTuple& tuple, TableIndex i, const Distribution& mu) {
    check_alphabet(tuple, mu);
    if (i >= tuple.size())
        throw Error(Errc::IndexOutOfRange,
                    "table " + std::to_string(i) + " is outside [" + std::to_string(tuple.size()) + "]");
    Rational sum = 0;
    for (SymbolIndex s = 0; s < tuple.sigma(); ++s)
        sum += mu[s] * static_cast<long long>(tuple.code(i, s).size());
    return sum;
}

std::vector<Rational> table_lengths(const CodeTuple& tuple, const Distribution& mu) {
    std::vector<Rational> out;
    out.reserve(tuple.size());
    for (TableIndex i = 0; i < tuple.size(); ++i)
        out.push_back(table_length(tuple, i, mu));
    return out;
}

Rational average_length(const CodeTuple& tuple, const Distribution& mu) {
    const auto pi = stationary(tuple, mu);
    const auto lengths = table_lengths(tuple, mu);
    Rational sum = 0;
    for (std::size_t i = 0; i < pi.size(); ++i)
        sum += pi[i] * lengths[i];
    return sum;
}

} // namespace codetuple
