#include <doctest.h>

#include "support.hpp"

#include "codetuple/error.hpp"
#include "codetuple/huffman.hpp"

#include <unordered_set>

using namespace support;

namespace {

std::string key(const CodeTuple& f) {
    return tuple_to_json(f).dump();
}

} // namespace

TEST_CASE("closed-form counts") {
    const Distribution mu = dist({"1/3", "2/3"});
    CHECK(count_code_tuples(SearchSpace(mu, 1, 1)) == 9);
    CHECK(count_code_tuples(SearchSpace(mu, 1, 2)) == 49);
    CHECK(count_code_tuples(SearchSpace(mu, 2, 2)) == 38465);
    CHECK(count_code_tuples(SearchSpace(dist({"1/5", "2/5", "2/5"}), 2, 2)) == 343 + 117649ULL * 64);
    CHECK_THROWS_AS(SearchSpace(mu, 0, 1), Error);
    CHECK_THROWS_AS(SearchSpace(mu, 1, 0), Error);
}

TEST_CASE("enumeration is complete and duplicate free") {
    const Distribution mu = dist({"1/3", "2/3"});
    for (auto [m, len] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
        const SearchSpace space(mu, m, len);
        TupleEnumerator e(space);
        std::unordered_set<std::string> seen;
        std::uint64_t n = 0;
        while (auto f = e.next()) {
            CHECK(f->size() <= space.m_max);
            CHECK(f->max_codeword_length() <= space.len_max);
            seen.insert(key(*f));
            ++n;
        }
        CHECK(n == count_code_tuples(space));
        CHECK(seen.size() == n);
    }
}

TEST_CASE("canonical order") {
    const Distribution mu = dist({"1/3", "2/3"});
    TupleEnumerator e(SearchSpace(mu, 2, 1));
    const CodeTuple first = e.at(0);
    CHECK(first.size() == 1);
    CHECK(first.code(0, 0).empty());
    CHECK(first.code(0, 1).empty());
    CHECK(e.at(1).code(0, 1) == bits("0"));
    CHECK(e.at(3).code(0, 0) == bits("0"));
    CHECK(e.at(8).code(0, 0) == bits("1"));
    CHECK(e.at(8).code(0, 1) == bits("1"));
    const CodeTuple two = e.at(9);
    CHECK(two.size() == 2);
    CHECK(two.next(1, 1) == 0);
    CHECK(e.at(10).next(1, 1) == 1);
    CHECK(e.at(10).next(1, 0) == 0);
    CHECK(e.at(e.count() - 1).code(1, 1) == bits("1"));
    CHECK_THROWS_AS(e.at(e.count()), Error);
    e.seek(e.count() - 1);
    CHECK(e.next());
    CHECK_FALSE(e.next());
}

TEST_CASE("space cap") {
    const SearchSpace big(dist({"1/4", "1/4", "1/4", "1/4"}), 4, 4);
    try {
        TupleEnumerator e(big);
        FAIL("expected SpaceTooLarge");
    } catch (const Error& err) {
        CHECK(err.code() == Errc::SpaceTooLarge);
    }
    CHECK_THROWS_AS(TupleEnumerator(SearchSpace(dist({"1/3", "2/3"}), 2, 2), 1000), Error);
}

TEST_CASE("sweep on the binary space") {
    const SearchSpace space(dist({"1/3", "2/3"}), 2, 2);
    const TheoremReport r = verify_theorem1(space, 1);
    CHECK(r.candidates_examined == 38465);
    CHECK(r.violations.empty());
    REQUIRE(r.min_class_length);
    CHECK(*r.min_class_length >= 1);
    CHECK(r.huffman_length == 1);
    CHECK(r.in_class <= r.in_ext_reg);
    CHECK(r.in_ext_reg <= r.in_ext);
    CHECK(r.in_ext <= r.candidates_examined);
    REQUIRE(r.best_tuple);
    CHECK(*r.best_tuple == TupleEnumerator(space).at(*r.best_id));

    // With two bits of delay the source splits into the words a, ba, bb
    // coded 00, 01, 1: (2/3 + 4/9 + 4/9) bits over 5/3 symbols.
    const TheoremReport r2 = verify_theorem1(space, 2);
    REQUIRE(r2.min_class_length);
    CHECK(*r2.min_class_length == q("14/15"));
    CHECK(r2.violations.size() == 8);
    const CodeTuple words = tuple_from_json(load_json_argument(
        R"({"alphabet":["a","b"],"tables":[{"code":{"a":"00","b":""},"next":{"a":0,"b":1}},
                                          {"code":{"a":"01","b":"1"},"next":{"a":0,"b":0}}]})"));
    CHECK(*r2.best_tuple == words);
    CHECK_FALSE(is_k_bit_delay_decodable(words, 1));
    CHECK(is_k_bit_delay_decodable(words, 2));
}

TEST_CASE("reports do not depend on partitioning") {
    const SearchSpace space(dist({"1/3", "2/3"}), 2, 2);
    SweepOptions serial;
    std::vector<TupleRow> rows_a;
    serial.row_sink = [&](const TupleRow& row) { rows_a.push_back(row); };
    const TheoremReport a = verify_theorem1(space, 1, serial);

    SweepOptions split;
    split.jobs = 3;
    split.chunk_size = 777;
    std::vector<TupleRow> rows_b;
    split.row_sink = [&](const TupleRow& row) { rows_b.push_back(row); };
    const TheoremReport b = verify_theorem1(space, 1, split);

    CHECK(report_to_json(a) == report_to_json(b));
    REQUIRE(rows_a.size() == rows_b.size());
    for (std::size_t i = 0; i < rows_a.size(); ++i) {
        CHECK(rows_a[i].id == i);
        CHECK(csv_row(rows_a[i]) == csv_row(rows_b[i]));
    }
}

TEST_CASE("merge is exact min and concatenation") {
    TheoremReport a;
    a.huffman_length = 1;
    a.candidates_examined = 3;
    a.min_class_length = q("3/2");
    a.best_id = 7;
    TheoremReport b;
    b.candidates_examined = 2;
    b.min_class_length = q("3/2");
    b.best_id = 4;
    a.merge(std::move(b));
    CHECK(a.candidates_examined == 5);
    CHECK(a.best_id == std::optional<std::uint64_t>(4));
    TheoremReport c;
    c.min_class_length = q("5/4");
    c.best_id = 9;
    a.merge(std::move(c));
    CHECK(*a.min_class_length == q("5/4"));
    CHECK(a.best_id == std::optional<std::uint64_t>(9));
}

TEST_CASE("candidate-list sweep shows the 2-bit separation") {
    const CodeTuple f1 = load_tuple("F_I");
    const CodeTuple f2 = load_tuple("F_II");
    const Distribution mu = load_dist("mu_I", f1);
    const std::vector<CodeTuple> candidates{f1, f2};
    const TheoremReport k2 = verify_theorem1(candidates, mu, 2);
    CHECK(k2.huffman_length == q("19/10"));
    CHECK(k2.in_class == 2);
    REQUIRE(k2.violations.size() == 1);
    CHECK(k2.violations[0].id == 1);
    CHECK(k2.violations[0].length == q("28/15"));
    CHECK(*k2.min_class_length == q("28/15"));

    const TheoremReport k1 = verify_theorem1(candidates, mu, 1);
    CHECK(k1.in_class == 1);
    CHECK(k1.violations.empty());
}

TEST_CASE("classification rows") {
    const CodeTuple alpha = load_tuple("F_alpha");
    const Distribution mu(alpha.alphabet_ptr(), {q("1/3"), q("1/3"), q("1/3")});
    const TupleRow row = classify_tuple(alpha, mu, 1);
    CHECK(row.m == 4);
    CHECK_FALSE(row.in_ext);
    CHECK_FALSE(row.in_reg);
    CHECK(csv_row(row) == "0,4,0,,,,");

    const CodeTuple beta = load_tuple("F_beta");
    const TupleRow rb = classify_tuple(beta, load_dist("mu_beta", beta), 1);
    CHECK(rb.in_ext);
    CHECK(rb.in_reg == std::optional<bool>(true));
    CHECK(rb.in_kdec == std::optional<bool>(true));
    CHECK(rb.length == std::optional<Rational>(q("501/136")));
    CHECK(csv_row(rb) == "0,3,1,1,1,501,136");
}

TEST_CASE("random sampling") {
    const SearchSpace space(dist({"1/5", "2/5", "2/5"}), 2, 2);
    CHECK(sample_random_tuples(space, 0, 1).empty());
    const auto a = sample_random_tuples(space, 100, 42);
    const auto b = sample_random_tuples(space, 100, 42);
    CHECK(a == b);
    CHECK(a != sample_random_tuples(space, 100, 43));
    for (const auto& f : sample_random_tuples(space, 1000, 7)) {
        CHECK(validate_code_tuple(to_raw(f), f.alphabet_ptr()) == f);
        CHECK(f.max_codeword_length() <= 2);
    }
}
