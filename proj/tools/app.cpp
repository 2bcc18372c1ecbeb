#include "app.hpp"

#include "codetuple/delay.hpp"
#include "codetuple/encode.hpp"
#include "codetuple/error.hpp"
#include "codetuple/explore.hpp"
#include "codetuple/huffman.hpp"
#include "codetuple/io.hpp"
#include "codetuple/markov.hpp"
#include "codetuple/rotate.hpp"
#include "codetuple/structure.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <string>

namespace codetuple::cli {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_input = 2;
constexpr int exit_internal = 3;

std::string format_symbols(const Alphabet& alphabet, const SymbolSeq& x) {
    bool single = true;
    for (const auto& s : alphabet.symbols())
        single = single && s.size() == 1;
    return alphabet.format_sequence(x, single ? "" : " ");
}

Json rational_row(const std::vector<Rational>& v) {
    Json out = Json::array();
    for (const auto& r : v)
        out.push_back(to_string(r));
    return out;
}

template <class F>
Json or_null(F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.code() == Errc::InternalInvariantViolation)
            throw;
        return Json(nullptr);
    }
}

Json analyze(const CodeTuple& tuple, const std::optional<Distribution>& mu, std::size_t k_max) {
    Json out;
    out["tables"] = tuple.size();
    Json sets = Json::array();
    Json forced = Json::array();
    Json depths = Json::array();
    Json prefix_free = Json::array();
    // Forced bits and fork depths are only defined on extendable tuples.
    const bool extendable = is_extendable(tuple);
    for (TableIndex i = 0; i < tuple.size(); ++i) {
        sets.push_back(to_string(first_bit_set(tuple, i)));
        prefix_free.push_back(is_prefix_free(tuple.table(i)));
        if (!extendable) {
            forced.push_back(nullptr);
            depths.push_back(nullptr);
            continue;
        }
        forced.push_back(or_null([&] {
            const BitString d = to_bits(forced_bit(tuple, i));
            return Json(d.empty() ? std::string("λ") : d.str());
        }));
        depths.push_back(or_null([&] { return Json(fork_depth(tuple, i)); }));
    }
    out["first_bit_sets"] = std::move(sets);
    out["forced_bits"] = std::move(forced);
    out["fork_depths"] = std::move(depths);
    out["prefix_free"] = std::move(prefix_free);
    out["extendable"] = extendable;
    out["fork"] = is_fork(tuple);
    Json kdec = Json::object();
    for (std::size_t k = 0; k <= k_max; ++k)
        kdec[std::to_string(k)] = is_k_bit_delay_decodable(tuple, k);
    out["k_dec"] = std::move(kdec);
    if (mu) {
        Json q = Json::array();
        for (const auto& row : transition_matrix(tuple, *mu))
            q.push_back(rational_row(row));
        out["transition_matrix"] = std::move(q);
        const bool regular = is_regular(tuple, *mu);
        out["regular"] = regular;
        out["table_lengths"] = rational_row(table_lengths(tuple, *mu));
        if (regular) {
            out["stationary"] = rational_row(stationary(tuple, *mu));
            const Rational length = average_length(tuple, *mu);
            out["average_length"] = to_string(length);
            out["average_length_decimal"] = to_double(length);
        } else {
            out["stationary"] = nullptr;
            out["average_length"] = nullptr;
        }
    }
    return out;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Analyse time-variant code-tuples: decodability, rotation, average length."};
    app.require_subcommand(1);

    std::string tuple_arg;
    std::string dist_arg;
    std::size_t k = 0;
    std::size_t start = 0;

    auto* analyze_cmd = app.add_subcommand("analyze", "Structural, delay and length report as JSON");
    analyze_cmd->add_option("--tuple", tuple_arg, "Code-tuple document (file or inline JSON)")->required();
    analyze_cmd->add_option("--dist", dist_arg, "Distribution document");
    std::size_t k_max = 2;
    analyze_cmd->add_option("--k", k_max, "Largest delay to test")->capture_default_str();

    auto* encode_cmd = app.add_subcommand("encode", "Encode a symbol sequence");
    std::string input;
    encode_cmd->add_option("--tuple", tuple_arg)->required();
    encode_cmd->add_option("--start", start)->capture_default_str();
    encode_cmd->add_option("--input", input, "Symbols, space separated or run together")->required();

    auto* decode_cmd = app.add_subcommand("decode", "Decode a bit string with k-bit lookahead");
    std::string bits_arg;
    decode_cmd->add_option("--tuple", tuple_arg)->required();
    decode_cmd->add_option("--start", start)->capture_default_str();
    decode_cmd->add_option("--k", k)->capture_default_str();
    decode_cmd->add_option("--bits", bits_arg)->required();

    auto* check_cmd = app.add_subcommand("check", "Decide k-bit delay decodability");
    std::optional<std::size_t> brute_depth;
    check_cmd->add_option("--tuple", tuple_arg)->required();
    check_cmd->add_option("--k", k)->required();
    check_cmd->add_option("--brute-depth", brute_depth, "Also run the exhaustive falsifier to this |x|");

    auto* rotate_cmd = app.add_subcommand("rotate", "Apply the rotation transform");
    std::size_t times = 1;
    bool to_fork = false;
    rotate_cmd->add_option("--tuple", tuple_arg)->required();
    auto* times_opt = rotate_cmd->add_option("--times", times)->capture_default_str();
    auto* fork_opt = rotate_cmd->add_flag("--to-fork", to_fork, "Rotate until every first-bit set is {0,1}");
    rotate_cmd->add_option("--k", k, "Delay assumed by --to-fork")->capture_default_str();
    times_opt->excludes(fork_opt);

    auto* huffman_cmd = app.add_subcommand("huffman", "Huffman code of a distribution");
    huffman_cmd->add_option("--dist", dist_arg)->required();

    auto* verify_cmd = app.add_subcommand("verify-theorem1", "Exhaustive check of L(F) >= L_Huff");
    std::size_t sigma = 0;
    std::size_t m_max = 1;
    std::size_t len_max = 1;
    std::size_t verify_k = 1;
    unsigned jobs = 1;
    std::string csv_path;
    verify_cmd->add_option("--dist", dist_arg)->required();
    verify_cmd->add_option("--sigma", sigma)->required();
    verify_cmd->add_option("--m-max", m_max)->required();
    verify_cmd->add_option("--len-max", len_max)->required();
    verify_cmd->add_option("--k", verify_k)->capture_default_str();
    verify_cmd->add_option("--jobs", jobs)->capture_default_str();
    verify_cmd->add_option("--csv", csv_path, "Write one row per tuple to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*analyze_cmd) {
            const CodeTuple tuple = tuple_from_json(load_json_argument(tuple_arg));
            std::optional<Distribution> mu;
            if (!dist_arg.empty())
                mu = distribution_from_json(load_json_argument(dist_arg), tuple.alphabet_ptr());
            out << analyze(tuple, mu, k_max).dump(2) << '\n';
            return exit_ok;
        }
        if (*encode_cmd) {
            const CodeTuple tuple = tuple_from_json(load_json_argument(tuple_arg));
            const SymbolSeq x = tuple.alphabet().parse_sequence(input);
            out << encode_star(tuple, start, x).str() << '\n';
            return exit_ok;
        }
        if (*decode_cmd) {
            const CodeTuple tuple = tuple_from_json(load_json_argument(tuple_arg));
            const SymbolSeq x = decode(tuple, start, BitString::parse(bits_arg), k);
            out << format_symbols(tuple.alphabet(), x) << '\n';
            return exit_ok;
        }
        if (*check_cmd) {
            const CodeTuple tuple = tuple_from_json(load_json_argument(tuple_arg));
            const DecodabilityResult result = check_k_bit_delay(tuple, k);
            Json doc;
            doc["k"] = k;
            doc["decodable"] = result.decodable;
            doc["configs_explored"] = result.configs_explored;
            doc["witness"] = result.witness ? witness_to_json(tuple, *result.witness) : Json(nullptr);
            if (brute_depth) {
                const auto refuted = brute_force_refute(tuple, k, *brute_depth);
                doc["brute_force"] = Json{{"max_len", *brute_depth},
                                          {"witness", refuted ? witness_to_json(tuple, *refuted) : Json(nullptr)}};
                if (refuted && result.decodable)
                    throw Error(Errc::InternalInvariantViolation,
                                "the falsifier found a witness for a tuple the automaton accepts");
            }
            out << doc.dump(2) << '\n';
            return result.decodable ? exit_ok : exit_negative;
        }
        if (*rotate_cmd) {
            CodeTuple tuple = tuple_from_json(load_json_argument(tuple_arg));
            if (to_fork) {
                tuple = normalize_to_fork(tuple, k).first;
            } else {
                for (std::size_t t = 0; t < times; ++t)
                    tuple = rotate(tuple);
            }
            out << tuple_to_json(tuple).dump(2) << '\n';
            return exit_ok;
        }
        if (*huffman_cmd) {
            const Distribution mu = distribution_from_json(load_json_argument(dist_arg));
            out << huffman_to_json(mu, huffman_code(mu)).dump(2) << '\n';
            return exit_ok;
        }
        if (*verify_cmd) {
            const Distribution mu = distribution_from_json(load_json_argument(dist_arg));
            if (mu.size() != sigma)
                throw Error(Errc::AlphabetMismatch, "--sigma " + std::to_string(sigma) + " but the distribution has " +
                                                        std::to_string(mu.size()) + " symbols");
            const SearchSpace space(mu, m_max, len_max);
            SweepOptions options;
            options.jobs = jobs;
            std::ofstream csv;
            if (!csv_path.empty()) {
                csv.open(csv_path);
                if (!csv)
                    throw Error(Errc::ParseError, "cannot write \"" + csv_path + "\"");
                csv << csv_header << '\n';
                options.row_sink = [&csv](const TupleRow& row) { csv << csv_row(row) << '\n'; };
            }
            const TheoremReport report = verify_theorem1(space, verify_k, options);
            out << report_to_json(report).dump(2) << '\n';
            return report.violations.empty() ? exit_ok : exit_negative;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == Errc::InternalInvariantViolation ? exit_internal : exit_input;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_input;
}

} // namespace codetuple::cli
