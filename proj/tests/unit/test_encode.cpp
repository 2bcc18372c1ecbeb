#include <doctest.h>

#include "support.hpp"

#include <random>

using namespace support;

TEST_CASE("encoding goldens") {
    const CodeTuple beta = load_tuple("F_beta");
    CHECK(encode_star(beta, 2, seq(beta, "baed")) == bits("110110011101001"));
    CHECK(next_table(beta, 2, seq(beta, "baed")) == 1);
    CHECK(encode_star(beta, 1, SymbolSeq{}).empty());
    CHECK(next_table(beta, 0, SymbolSeq{}) == 0);

    const CodeTuple f1 = load_tuple("F_I");
    CHECK(encode_star(f1, 0, seq(f1, "adbac")) == bits("000100100001"));

    // Hand evaluation over the transition columns: tau_0(a) = 0, tau_0(d) = 1.
    const CodeTuple f2 = load_tuple("F_II");
    CHECK(next_table(f2, 0, seq(f2, "ad")) == 1);
    CHECK(encode_star(f2, 0, seq(f2, "adbac")) == bits("100111110001"));
}

TEST_CASE("streaming encoder") {
    const CodeTuple beta = load_tuple("F_beta");
    auto [out, state] = encoder_step(EncoderState(beta, 2), 1);
    CHECK(out == bits("11"));
    CHECK(state.current_table() == 1);

    const CodeTuple gamma = load_tuple("F_gamma");
    auto [out2, state2] = encoder_step(EncoderState(gamma, 0), 1);
    CHECK(out2 == bits("0"));
    CHECK(state2.current_table() == 1);

    CHECK_THROWS_AS(EncoderState(beta, 3), Error);
    CHECK_THROWS_AS(encoder_step(EncoderState(beta, 0), 7), Error);
}

TEST_CASE("folding steps reproduces encode_star") {
    const CodeTuple beta = load_tuple("F_beta");
    std::mt19937 rng(3);
    for (int n = 0; n < 300; ++n) {
        SymbolSeq x(rng() % 9);
        for (auto& s : x)
            s = rng() % beta.sigma();
        const TableIndex i = rng() % beta.size();
        EncoderState state(beta, i);
        BitString out;
        for (SymbolIndex s : x) {
            auto [w, next] = state.step(s);
            out += w;
            state = next;
        }
        CHECK(out == encode_star(beta, i, x));
        CHECK(state.current_table() == next_table(beta, i, x));
    }
}
