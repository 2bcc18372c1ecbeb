#include <doctest.h>

#include "support.hpp"

#include "codetuple/error.hpp"
#include "codetuple/huffman.hpp"

#include <random>

using namespace support;

namespace {

std::vector<std::size_t> sorted_lengths(const CodeTable& t) {
    std::vector<std::size_t> out;
    for (const auto& w : t.codewords)
        out.push_back(w.size());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("Huffman goldens") {
    const HuffmanResult r = huffman_code(dist({"1/10", "2/10", "3/10", "4/10"}));
    CHECK(r.length == q("19/10"));
    CHECK(r.table.codewords == std::vector<BitString>{bits("100"), bits("101"), bits("11"), bits("0")});
    CHECK(huffman_length(dist({"1/2", "1/2"})) == 1);
    const HuffmanResult u = huffman_code(dist({"1/5", "1/5", "1/5", "1/5", "1/5"}));
    CHECK(sorted_lengths(u.table) == std::vector<std::size_t>{2, 2, 2, 3, 3});
    CHECK(u.length == q("12/5"));
    CHECK(u.length == exhaustive_prefix_code_length(dist({"1/5", "1/5", "1/5", "1/5", "1/5"}), 4));
}

TEST_CASE("five-symbol example distribution") {
    // The minimum over all prefix codes is 23/10; 11/5 would sit below the
    // entropy (about 2.246 bits).
    const Distribution mu = dist({"1/10", "2/10", "2/10", "2/10", "3/10"});
    CHECK(exhaustive_prefix_code_length(mu, 5) == q("23/10"));
    CHECK(huffman_length(mu) == q("23/10"));
}

TEST_CASE("Kraft sums") {
    CHECK(kraft_sum(load_tuple("F_I").table(0)) == 1);
    CodeTable over;
    over.codewords = {bits("0"), bits("1"), bits("10")};
    CHECK(kraft_sum(over) == q("5/4"));
    CHECK(kraft_sum(load_tuple("F_alpha").table(3)) == 3);
}

TEST_CASE("optimality, prefix-freeness and siblings on random distributions") {
    std::mt19937 rng(2024);
    for (int n = 0; n < 120; ++n) {
        const std::size_t sigma = 2 + rng() % 4;
        std::vector<int> weights(sigma);
        int total = 0;
        for (auto& w : weights) {
            w = 1 + static_cast<int>(rng() % 20);
            total += w;
        }
        auto a = std::make_shared<const Alphabet>(Alphabet::letters(sigma));
        std::vector<Rational> p;
        for (int w : weights)
            p.push_back(Rational(w, total));
        const Distribution mu(a, p);
        const HuffmanResult r = huffman_code(mu);
        CHECK(is_prefix_free(r.table));
        CHECK(kraft_sum(r.table) == 1);
        CHECK(r.length == exhaustive_prefix_code_length(mu, sigma));

        std::vector<SymbolIndex> order(sigma);
        for (SymbolIndex s = 0; s < sigma; ++s)
            order[s] = s;
        std::stable_sort(order.begin(), order.end(), [&](SymbolIndex x, SymbolIndex y) { return p[x] < p[y]; });
        const std::size_t longest = sorted_lengths(r.table).back();
        // Some pair among the least probable symbols sits at the deepest
        // level as siblings: equal length, differing only in the last bit.
        const BitString& u = r.table[order[0]];
        bool found = false;
        for (SymbolIndex s = 0; s < sigma; ++s) {
            const BitString& v = r.table[s];
            if (s != order[0] && p[s] == p[order[1]] && v.size() == u.size() && v.size() == longest &&
                lcp(u, v).size() + 1 == u.size())
                found = true;
        }
        CHECK(found);
    }
}
