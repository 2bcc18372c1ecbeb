#pragma once

#include "codetuple/code_tuple.hpp"
#include "codetuple/rational.hpp"

#include <optional>
#include <vector>

namespace codetuple {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Q_{i,j} = sum of mu(s) over symbols s with tau_i(s) = j.
RationalMatrix transition_matrix(const CodeTuple& tuple, const Distribution& mu);

/// Rank by exact Gaussian elimination.
std::size_t exact_rank(RationalMatrix a);

/// Unique solution of a x = b, or nullopt when the system is inconsistent or
/// underdetermined. `a` may have more rows than columns.
std::optional<std::vector<Rational>> solve_unique(RationalMatrix a, std::vector<Rational> b);

/// pi Q = pi together with sum(pi) = 1 has exactly one solution.
bool is_regular(const CodeTuple& tuple, const Distribution& mu);

/// The unique stationary distribution; throws NotRegular.
std::vector<Rational> stationary(const CodeTuple& tuple, const Distribution& mu);

/// L_i = sum_s |f_i(s)| mu(s).
Rational table_length(const CodeTuple& tuple, TableIndex i, const Distribution& mu);
std::vector<Rational> table_lengths(const CodeTuple& tuple, const Distribution& mu);

/// L = sum_i pi_i L_i; throws NotRegular.
Rational average_length(const CodeTuple& tuple, const Distribution& mu);

} // namespace codetuple
