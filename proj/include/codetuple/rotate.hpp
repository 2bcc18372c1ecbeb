#pragma once

#include "codetuple/code_tuple.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace codetuple {

class Distribution;

/// Moves every table's forced bit across codeword boundaries: each codeword
/// gets the successor table's forced bit appended, and tables whose
/// first-bit set is a singleton drop their own leading bit. Transitions are
/// unchanged. Throws NotExtendable when some forced bit is undefined.
CodeTuple rotate(const CodeTuple& tuple);

/// F, rotate(F), rotate(rotate(F)), ... up to the first fork tuple.
struct RotationTrace {
    std::vector<CodeTuple> steps;
    std::size_t fixpoint_index = 0;
};

/// Throws InternalInvariantViolation if no fork tuple appears within
/// `max_steps` rotations.
RotationTrace rotation_trace(const CodeTuple& tuple, std::size_t max_steps);

struct NormalizeOptions {
    bool check_extendable = true;
    bool check_decodable = true;
};

/// Rotates until every first-bit set is {0,1}. Returns the fork tuple and the
/// number of rotations applied, which never exceeds the largest fork depth.
///
/// Errors: NotExtendable, NotKDec (when the corresponding checks are on),
/// InternalInvariantViolation when the step cap max fork depth + 1 is hit.
std::pair<CodeTuple, std::size_t> normalize_to_fork(const CodeTuple& tuple, std::size_t k,
                                                    NormalizeOptions options = {});

/// normalize_to_fork(F, 1), then asserts every table of the result is
/// prefix-free (InternalInvariantViolation otherwise).
CodeTuple reduce_1dec_to_0dec(const CodeTuple& tuple);

/// Single-table tuple built from the table with the smallest expected
/// codeword length (lowest index on ties). Throws NotRegular.
CodeTuple best_single_table(const CodeTuple& tuple, const Distribution& mu);

} // namespace codetuple
