#pragma once

#include "codetuple/alphabet.hpp"
#include "codetuple/code_tuple.hpp"
#include "codetuple/delay.hpp"
#include "codetuple/explore.hpp"
#include "codetuple/huffman.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace codetuple {

using Json = nlohmann::ordered_json;

/// {"alphabet": [...], "tables": [{"code": {sym: "bits"}, "next": {sym: int}}, ...]}
CodeTuple tuple_from_json(const Json& doc);
Json tuple_to_json(const CodeTuple& tuple);

/// {sym: "p/q" | "0.3" | number}. With an alphabet, symbols are matched by
/// name and must cover it exactly; otherwise the document order defines one.
Distribution distribution_from_json(const Json& doc);
Distribution distribution_from_json(const Json& doc, const AlphabetPtr& alphabet);

/// Inline JSON when `arg` starts with '{', otherwise a file path.
Json load_json_argument(std::string_view arg);

Json witness_to_json(const CodeTuple& tuple, const DelayWitness& witness);
Json huffman_to_json(const Distribution& mu, const HuffmanResult& result);
Json report_to_json(const TheoremReport& report);

inline constexpr std::string_view csv_header = "tuple-id,m,in_ext,in_reg,in_kdec,L_num,L_den";
std::string csv_row(const TupleRow& row);

} // namespace codetuple
