#include <doctest.h>

#include "support.hpp"

#include "app.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace support;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "codetuple-cli");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = codetuple::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string fx(const char* name) {
    return fixture_path(std::string(name) + ".json");
}

} // namespace

TEST_CASE("huffman subcommand") {
    const Outcome o = run({"huffman", "--dist", R"({"a":"1/10","b":"2/10","c":"3/10","d":"4/10"})"});
    CHECK(o.code == 0);
    CHECK(Json::parse(o.out)["length"] == "19/10");
}

TEST_CASE("check subcommand exit codes") {
    const Outcome bad = run({"check", "--tuple", fx("F_alpha"), "--k", "1", "--brute-depth", "3"});
    CHECK(bad.code == 1);
    const Json doc = Json::parse(bad.out);
    CHECK(doc["decodable"] == false);
    CHECK(doc["witness"]["x"] == Json::array({"a"}));
    CHECK(doc["brute_force"]["witness"] == doc["witness"]);
    const Outcome good = run({"check", "--tuple", fx("F_alpha"), "--k", "2"});
    CHECK(good.code == 0);
    CHECK(Json::parse(good.out)["witness"].is_null());
}

TEST_CASE("rotate subcommand") {
    const Outcome o = run({"rotate", "--tuple", fx("F_beta"), "--times", "1"});
    REQUIRE(o.code == 0);
    CHECK(tuple_from_json(Json::parse(o.out)) == load_tuple("F_gamma"));
    const Outcome f = run({"rotate", "--tuple", fx("F_beta"), "--to-fork", "--k", "1"});
    REQUIRE(f.code == 0);
    CHECK(tuple_from_json(Json::parse(f.out)) == load_tuple("F_delta"));
    CHECK(run({"rotate", "--tuple", fx("F_alpha")}).code == 2);
    CHECK(run({"rotate", "--tuple", fx("F_beta"), "--times", "1", "--to-fork"}).code == 2);
}

TEST_CASE("encode and decode subcommands") {
    const Outcome e = run({"encode", "--tuple", fx("F_beta"), "--start", "2", "--input", "b a e d"});
    CHECK(e.code == 0);
    CHECK(e.out == "110110011101001\n");
    const Outcome d = run({"decode", "--tuple", fx("F_beta"), "--start", "2", "--k", "1", "--bits", "1101100111010010"});
    CHECK(d.code == 0);
    CHECK(d.out == "baed\n");
    CHECK(run({"decode", "--tuple", fx("F_beta"), "--start", "1", "--k", "1", "--bits", "11"}).code == 2);
    CHECK(run({"encode", "--tuple", fx("F_beta"), "--input", "xyz"}).code == 2);
    CHECK(run({"encode", "--tuple", fx("F_beta"), "--start", "7", "--input", "a"}).code == 2);
}

TEST_CASE("analyze subcommand") {
    const Outcome o = run({"analyze", "--tuple", fx("F_beta"), "--dist", fx("mu_beta")});
    REQUIRE(o.code == 0);
    const Json doc = Json::parse(o.out);
    CHECK(doc["first_bit_sets"] == Json::array({"{0,1}", "{0}", "{1}"}));
    CHECK(doc["forced_bits"] == Json::array({"λ", "0", "1"}));
    CHECK(doc["fork_depths"] == Json::array({0, 2, 1}));
    CHECK(doc["stationary"] == Json::array({"7/68", "13/34", "35/68"}));
    CHECK(doc["table_lengths"] == Json::array({"14/5", "39/10", "37/10"}));
    CHECK(doc["average_length"] == "501/136");
    CHECK(doc["k_dec"]["0"] == false);
    CHECK(doc["k_dec"]["1"] == true);

    const Json alpha = Json::parse(run({"analyze", "--tuple", fx("F_alpha")}).out);
    CHECK(alpha["extendable"] == false);
    CHECK(alpha["first_bit_sets"][3] == "{}");
    for (const auto& v : alpha["forced_bits"])
        CHECK(v.is_null());
}

TEST_CASE("verify-theorem1 subcommand") {
    const auto csv = std::filesystem::temp_directory_path() / "codetuple_cli_rows.csv";
    const Outcome o = run({"verify-theorem1", "--dist", R"({"a":"1/3","b":"2/3"})", "--sigma", "2", "--m-max", "1",
                           "--len-max", "2", "--csv", csv.string()});
    CHECK(o.code == 0);
    CHECK(Json::parse(o.out)["candidates_examined"] == 49);
    std::ifstream in(csv);
    std::string line;
    std::size_t lines = 0;
    std::getline(in, line);
    CHECK(line == std::string(csv_header));
    while (std::getline(in, line))
        ++lines;
    CHECK(lines == 49);
    std::filesystem::remove(csv);

    CHECK(run({"verify-theorem1", "--dist", R"({"a":"1/3","b":"2/3"})", "--sigma", "3", "--m-max", "1", "--len-max",
               "1"})
              .code == 2);
}

TEST_CASE("input errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"check", "--tuple", fx("F_beta")}).code == 2);
    CHECK(run({"check", "--tuple", "/nonexistent.json", "--k", "1"}).code == 2);
    CHECK(run({"check", "--tuple", "{not json", "--k", "1"}).code == 2);
    CHECK(run({"huffman", "--dist", R"({"a":"1/2","b":"1/3"})"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
