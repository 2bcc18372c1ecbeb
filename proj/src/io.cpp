#include "codetuple/io.hpp"
#include "codetuple/error.hpp"

#include <fstream>
#include <sstream>

namespace codetuple {

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw Error(Errc::ParseError, what);
}

const Json& member(const Json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key))
        malformed(std::string("missing field \"") + key + "\"");
    return doc.at(key);
}

Rational probability_from_json(const Json& v) {
    if (v.is_string())
        return parse_rational(v.get<std::string>());
    if (v.is_number_integer() || v.is_number_unsigned())
        return Rational(v.get<std::int64_t>());
    if (v.is_number_float())
        return parse_rational(v.dump());
    malformed("probability must be a string or a number, got " + v.dump());
}

Json sequence_to_json(const Alphabet& alphabet, const SymbolSeq& x) {
    Json out = Json::array();
    for (SymbolIndex s : x)
        out.push_back(alphabet.name(s));
    return out;
}

} // namespace

CodeTuple tuple_from_json(const Json& doc) {
    const Json& symbols = member(doc, "alphabet");
    if (!symbols.is_array())
        malformed("\"alphabet\" must be an array of strings");
    std::vector<std::string> names;
    for (const auto& s : symbols) {
        if (!s.is_string())
            malformed("\"alphabet\" must be an array of strings");
        names.push_back(s.get<std::string>());
    }
    auto alphabet = std::make_shared<const Alphabet>(std::move(names));

    const Json& tables = member(doc, "tables");
    if (!tables.is_array())
        malformed("\"tables\" must be an array");
    std::vector<RawTable> raw;
    for (const auto& t : tables) {
        RawTable r;
        const Json& code = member(t, "code");
        const Json& next = member(t, "next");
        if (!code.is_object() || !next.is_object())
            malformed("\"code\" and \"next\" must be objects keyed by symbol");
        for (const auto& [sym, bits] : code.items()) {
            if (!bits.is_string())
                malformed("codeword for \"" + sym + "\" must be a string");
            r.code[sym] = bits.get<std::string>();
        }
        for (const auto& [sym, target] : next.items()) {
            if (!target.is_number_integer())
                malformed("transition for \"" + sym + "\" must be an integer");
            r.next[sym] = target.get<std::int64_t>();
        }
        raw.push_back(std::move(r));
    }
    return validate_code_tuple(raw, alphabet);
}

Json tuple_to_json(const CodeTuple& tuple) {
    Json doc;
    doc["alphabet"] = tuple.alphabet().symbols();
    Json tables = Json::array();
    for (TableIndex i = 0; i < tuple.size(); ++i) {
        Json code = Json::object();
        Json next = Json::object();
        for (SymbolIndex s = 0; s < tuple.sigma(); ++s) {
            code[tuple.alphabet().name(s)] = tuple.code(i, s).str();
            next[tuple.alphabet().name(s)] = tuple.next(i, s);
        }
        tables.push_back(Json{{"code", std::move(code)}, {"next", std::move(next)}});
    }
    doc["tables"] = std::move(tables);
    return doc;
}

Distribution distribution_from_json(const Json& doc) {
    if (!doc.is_object())
        malformed("distribution must be an object keyed by symbol");
    std::vector<std::string> names;
    std::vector<Rational> probs;
    for (const auto& [sym, v] : doc.items()) {
        names.push_back(sym);
        probs.push_back(probability_from_json(v));
    }
    return Distribution(std::make_shared<const Alphabet>(std::move(names)), std::move(probs));
}

Distribution distribution_from_json(const Json& doc, const AlphabetPtr& alphabet) {
    if (!doc.is_object())
        malformed("distribution must be an object keyed by symbol");
    std::vector<std::optional<Rational>> probs(alphabet->size());
    for (const auto& [sym, v] : doc.items())
        probs[alphabet->index_of(sym)] = probability_from_json(v);
    std::vector<Rational> out;
    for (SymbolIndex s = 0; s < probs.size(); ++s) {
        if (!probs[s])
            throw Error(Errc::MissingSymbol, "no probability for \"" + alphabet->name(s) + "\"");
        out.push_back(*probs[s]);
    }
    return Distribution(alphabet, std::move(out));
}

Json load_json_argument(std::string_view arg) {
    std::string text;
    if (!arg.empty() && arg.front() == '{') {
        text = std::string(arg);
    } else {
        std::ifstream in{std::string(arg)};
        if (!in)
            malformed("cannot read \"" + std::string(arg) + "\"");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        malformed(std::string("invalid JSON: ") + e.what());
    }
}

Json witness_to_json(const CodeTuple& tuple, const DelayWitness& w) {
    const Alphabet& a = tuple.alphabet();
    Json out;
    out["start"] = w.start;
    out["x"] = sequence_to_json(a, w.x);
    out["lookahead"] = w.lookahead.str();
    out["extending"] = sequence_to_json(a, w.extending);
    out["diverging"] = sequence_to_json(a, w.diverging);
    return out;
}

Json huffman_to_json(const Distribution& mu, const HuffmanResult& result) {
    Json code = Json::object();
    for (SymbolIndex s = 0; s < mu.size(); ++s)
        code[mu.alphabet().name(s)] = result.table[s].str();
    Json out;
    out["code"] = std::move(code);
    out["length"] = to_string(result.length);
    out["length_decimal"] = to_double(result.length);
    return out;
}

Json report_to_json(const TheoremReport& r) {
    Json out;
    out["sigma"] = r.sigma;
    out["m_max"] = r.m_max;
    out["len_max"] = r.len_max;
    out["k"] = r.k;
    out["huffman_length"] = to_string(r.huffman_length);
    out["candidates_examined"] = r.candidates_examined;
    out["in_ext"] = r.in_ext;
    out["in_ext_reg"] = r.in_ext_reg;
    out["in_class"] = r.in_class;
    out["min_class_length"] = r.min_class_length ? Json(to_string(*r.min_class_length)) : Json(nullptr);
    out["best_id"] = r.best_id ? Json(*r.best_id) : Json(nullptr);
    out["best_tuple"] = r.best_tuple ? tuple_to_json(*r.best_tuple) : Json(nullptr);
    Json violations = Json::array();
    for (const auto& v : r.violations)
        violations.push_back(Json{{"id", v.id}, {"length", to_string(v.length)}, {"tuple", tuple_to_json(v.tuple)}});
    out["violations"] = std::move(violations);
    return out;
}

std::string csv_row(const TupleRow& row) {
    auto flag = [](const std::optional<bool>& b) -> std::string {
        if (!b)
            return "";
        return *b ? "1" : "0";
    };
    std::ostringstream out;
    out << row.id << ',' << row.m << ',' << (row.in_ext ? 1 : 0) << ',' << flag(row.in_reg) << ','
        << flag(row.in_kdec) << ',';
    if (row.length)
        out << boost::multiprecision::numerator(*row.length) << ',' << boost::multiprecision::denominator(*row.length);
    else
        out << ',';
    return out.str();
}

} // namespace codetuple
