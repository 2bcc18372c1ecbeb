#include <doctest.h>

#include "support.hpp"

#include "codetuple/error.hpp"
#include "codetuple/markov.hpp"

using namespace support;

namespace {

RationalMatrix matrix(std::vector<std::vector<const char*>> rows) {
    RationalMatrix out;
    for (const auto& row : rows) {
        std::vector<Rational> r;
        for (const char* t : row)
            r.push_back(q(t));
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

TEST_CASE("example distribution on F_beta") {
    const CodeTuple beta = load_tuple("F_beta");
    const Distribution mu = load_dist("mu_beta", beta);
    CHECK(transition_matrix(beta, mu) == matrix({{"0", "3/5", "2/5"}, {"0", "3/10", "7/10"}, {"1/5", "2/5", "2/5"}}));
    CHECK(is_regular(beta, mu));
    CHECK(stationary(beta, mu) == std::vector<Rational>{q("7/68"), q("26/68"), q("35/68")});
    CHECK(table_length(beta, 0, mu) == q("14/5"));
    CHECK(table_length(beta, 1, mu) == q("39/10"));
    CHECK(table_lengths(beta, mu) == std::vector<Rational>{q("14/5"), q("39/10"), q("37/10")});
    CHECK(average_length(beta, mu) == q("501/136"));
}

TEST_CASE("lengths and stationary law of the rotated tuples") {
    const CodeTuple gamma = load_tuple("F_gamma");
    const CodeTuple delta = load_tuple("F_delta");
    const Distribution mu = load_dist("mu_beta", gamma);
    CHECK(table_lengths(gamma, mu) == std::vector<Rational>{q("19/5"), q("39/10"), q("7/2")});
    CHECK(table_lengths(delta, mu) == std::vector<Rational>{q("22/5"), q("16/5"), q("39/10")});
    CHECK(stationary(gamma, mu) == std::vector<Rational>{q("7/68"), q("26/68"), q("35/68")});
    CHECK(stationary(delta, mu) == std::vector<Rational>{q("7/68"), q("26/68"), q("35/68")});
    CHECK(average_length(gamma, mu) == q("501/136"));
    CHECK(average_length(delta, mu) == q("501/136"));
}

TEST_CASE("single tables and the AIFV example") {
    const CodeTuple f1 = load_tuple("F_I");
    const Distribution mu = load_dist("mu_I", f1);
    CHECK(transition_matrix(f1, mu) == matrix({{"1"}}));
    CHECK(is_regular(f1, mu));
    CHECK(stationary(f1, mu) == std::vector<Rational>{1});
    CHECK(average_length(f1, mu) == q("19/10"));

    const CodeTuple f2 = load_tuple("F_II");
    CHECK(transition_matrix(f2, mu) == matrix({{"3/5", "2/5"}, {"4/5", "1/5"}}));
    CHECK(stationary(f2, mu) == std::vector<Rational>{q("2/3"), q("1/3")});
    CHECK(average_length(f2, mu) == q("28/15"));
}

TEST_CASE("irregular and mismatched inputs") {
    const CodeTuple absorbing = tuple_from_json(load_json_argument(
        R"({"alphabet":["a","b"],"tables":[{"code":{"a":"0","b":"1"},"next":{"a":0,"b":0}},
                                          {"code":{"a":"0","b":"1"},"next":{"a":1,"b":1}}]})"));
    const Distribution half = dist({"1/2", "1/2"});
    const Distribution mu{absorbing.alphabet_ptr(), half.probs()};
    CHECK_FALSE(is_regular(absorbing, mu));
    CHECK_THROWS_AS(stationary(absorbing, mu), Error);
    try {
        average_length(absorbing, mu);
        FAIL("expected NotRegular");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotRegular);
    }
    try {
        transition_matrix(load_tuple("F_beta"), mu);
        FAIL("expected AlphabetMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::AlphabetMismatch);
    }
    CodeTable blank;
    blank.codewords = {BitString{}, BitString{}};
    CHECK(table_length(single_table_tuple(absorbing.alphabet_ptr(), blank), 0, mu) == 0);
}

TEST_CASE("linear algebra helpers") {
    CHECK(exact_rank(matrix({{"1", "2"}, {"2", "4"}})) == 1);
    CHECK(exact_rank(matrix({{"0", "1"}, {"1", "0"}, {"1", "1"}})) == 2);
    CHECK(exact_rank(matrix({{"0", "0"}})) == 0);
    const auto x = solve_unique(matrix({{"2", "1"}, {"1", "3"}}), {q("3"), q("5")});
    REQUIRE(x);
    CHECK(*x == std::vector<Rational>{q("4/5"), q("7/5")});
    CHECK_FALSE(solve_unique(matrix({{"1", "1"}, {"2", "2"}}), {q("1"), q("2")}));
    CHECK_FALSE(solve_unique(matrix({{"1", "0"}, {"1", "0"}}), {q("1"), q("2")}));
    const auto over = solve_unique(matrix({{"1", "0"}, {"0", "1"}, {"1", "1"}}), {q("1"), q("2"), q("3")});
    REQUIRE(over);
    CHECK(*over == std::vector<Rational>{q("1"), q("2")});
}

TEST_CASE("stationary solutions and regularity on the small space") {
    const Distribution mu = dist({"1/3", "2/3"});
    TupleEnumerator e(SearchSpace(mu, 2, 1));
    std::size_t regular = 0;
    while (auto f = e.next()) {
        const auto Q = transition_matrix(*f, mu);
        for (const auto& row : Q) {
            Rational sum = 0;
            for (const auto& v : row) {
                CHECK(v >= 0);
                sum += v;
            }
            CHECK(sum == 1);
        }
        CHECK(is_regular(*f, mu) == graph_regular(*f));
        if (!is_regular(*f, mu))
            continue;
        ++regular;
        const auto pi = stationary(*f, mu);
        Rational total = 0;
        for (std::size_t j = 0; j < pi.size(); ++j) {
            Rational col = 0;
            for (std::size_t i = 0; i < pi.size(); ++i)
                col += pi[i] * Q[i][j];
            CHECK(col == pi[j]);
            total += pi[j];
        }
        CHECK(total == 1);
    }
    CHECK(regular > 0);
}
