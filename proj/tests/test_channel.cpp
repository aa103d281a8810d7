#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "decmon/channel.hpp"
#include "decmon/errors.hpp"

using namespace decmon;
using doctest::Approx;

TEST_CASE("channel factories and bhattacharyya") {
    CHECK(make_bec(0.0).bhattacharyya() == Approx(0.0).epsilon(1e-14));
    CHECK(make_bec(0.37).bhattacharyya() == Approx(0.37).epsilon(1e-14));
    CHECK(make_bsc(0.11).bhattacharyya() ==
          Approx(2 * std::sqrt(0.11 * 0.89)).epsilon(1e-14));
    CHECK(make_bsc(0.0).bhattacharyya() == 0.0);
    CHECK_THROWS_AS(make_bec(1.5), std::invalid_argument);
    CHECK_THROWS_AS(make_bsc(-0.1), std::invalid_argument);

    SUBCASE("validation rejects broken channels") {
        CHECK_THROWS_AS(SymmetricChannel({0.5, 0.4}, {0.4, 0.5}, {1, 0}),
                        std::invalid_argument);  // not normalized
        CHECK_THROWS_AS(SymmetricChannel({0.5, 0.5}, {0.5, 0.5}, {1, 1}),
                        std::invalid_argument);  // not an involution
        CHECK_THROWS_AS(SymmetricChannel({0.7, 0.3}, {0.3, 0.7}, {0, 1}),
                        std::invalid_argument);  // symmetry broken
    }
}

TEST_CASE("arikan transforms on the erasure channel") {
    SymmetricChannel W = make_bec(0.5);
    CHECK(transform_minus(W).bhattacharyya() == Approx(0.75).epsilon(1e-13));
    CHECK(transform_plus(W).bhattacharyya() == Approx(0.25).epsilon(1e-13));

    // a BEC stays a three-symbol channel under both transforms
    CHECK(transform_minus(W).alphabet_size() == 3);
    CHECK(transform_plus(W).alphabet_size() == 3);

    SUBCASE("perfect channel stays perfect") {
        SymmetricChannel perfect = make_bec(0.0);
        CHECK(transform_minus(perfect).bhattacharyya() == 0.0);
        CHECK(transform_plus(perfect).bhattacharyya() == 0.0);
    }

    SUBCASE("closed-form recursion within 1e-12") {
        for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            SymmetricChannel bec = make_bec(p);
            CHECK(transform_minus(bec).bhattacharyya() ==
                  Approx(2 * p - p * p).epsilon(1e-12));
            CHECK(transform_plus(bec).bhattacharyya() == Approx(p * p).epsilon(1e-12));
        }
    }
}

TEST_CASE("transform outputs remain valid symmetric channels") {
    for (double p : {0.02, 0.11, 0.25, 0.4}) {
        SymmetricChannel W = make_bsc(p);
        for (int step = 0; step < 4; ++step) {
            SymmetricChannel Wm = transform_minus(W);
            SymmetricChannel Wp = transform_plus(W);
            Wm.validate();
            Wp.validate();
            double b = W.bhattacharyya();
            CHECK(Wp.bhattacharyya() <= b + 1e-12);
            CHECK(b <= Wm.bhattacharyya() + 1e-12);
            W = Wp;  // walk down the plus chain, where alphabets grow
        }
    }
}

TEST_CASE("merging groups proportional pairs exactly") {
    // two outputs with identical likelihood ratio collapse without moving B:
    // sqrt((a1+a2)(c1+c2)) = sqrt(a1 c1) + sqrt(a2 c2) when a1 c2 = a2 c1
    double a1 = 9.0 / 16, c1 = 3.0 / 16, a2 = 3.0 / 16, c2 = 1.0 / 16;
    CHECK(a1 * c2 == a2 * c1);  // dyadic values, exact proportionality
    CHECK(std::sqrt((a1 + a2) * (c1 + c2)) ==
          Approx(std::sqrt(a1 * c1) + std::sqrt(a2 * c2)).epsilon(1e-14));

    // a channel carrying two proportional symbol pairs per side
    SymmetricChannel W({a1, a2, c1, c2}, {c1, c2, a1, a2}, {2, 3, 0, 1});
    double b = W.bhattacharyya();
    // one minus step forces a merge pass over the product alphabet
    SymmetricChannel Wm = transform_minus(W);
    SymmetricChannel ref = transform_minus(SymmetricChannel({a1 + a2, c1 + c2},
                                                            {c1 + c2, a1 + a2}, {1, 0}));
    CHECK(Wm.alphabet_size() == ref.alphabet_size());
    CHECK(Wm.bhattacharyya() == Approx(ref.bhattacharyya()).epsilon(1e-13));
    CHECK(b == Approx(2 * std::sqrt((a1 + a2) * (c1 + c2))).epsilon(1e-13));
}

TEST_CASE("zero-probability symbols are dropped") {
    SymmetricChannel W = make_bec(0.0);  // erasure symbol has zero mass
    CHECK(transform_minus(W).alphabet_size() == 2);
}

TEST_CASE("alphabet caps produce cap errors") {
    ChannelCaps tight;
    tight.raw_pair_cap = 4;
    CHECK_THROWS_AS(transform_minus(make_bec(0.5), tight), CapError);
    ChannelCaps tiny_alpha;
    tiny_alpha.alphabet_cap = 2;
    CHECK_THROWS_AS(transform_minus(make_bec(0.5), tiny_alpha), CapError);
}

TEST_CASE("channel spec strings") {
    CHECK(parse_channel_spec("bec:0.5").bhattacharyya() == Approx(0.5).epsilon(1e-14));
    CHECK(parse_channel_spec("bsc:0.11").alphabet_size() == 2);
    CHECK_THROWS_AS(parse_channel_spec("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(parse_channel_spec("awgn:1.0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_channel_spec("table:not_there.json"), std::invalid_argument);

    SUBCASE("table form") {
        const char* path = "test_channel_table.json";
        {
            std::ofstream out(path);
            out << R"({"alphabet": 3, "p0": [0.6, 0.4, 0.0], "p1": [0.0, 0.4, 0.6],)"
                << R"( "involution": [2, 1, 0]})";
        }
        SymmetricChannel W = parse_channel_spec(std::string("table:") + path);
        CHECK(W.bhattacharyya() == Approx(0.4).epsilon(1e-14));
        std::remove(path);
    }
}
