#include "cblock/intmat.hpp"

#include <doctest.h>

#include <random>

using namespace cblock;

TEST_CASE("rational arithmetic stays reduced") {
    Rational a(6, -4);
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(a.floor() == -2);
    CHECK(a.frac() == Rational(1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(-1, 4) == Rational(-2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(5, 5).is_integer());
    CHECK(Rational(-7, 3).str() == "-7/3");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(INT64_MAX) * Rational(2), std::overflow_error);
}

TEST_CASE("determinant and inverse") {
    IntMatrix e6{{2, 0, -1, 0, 0, 0}, {0, 2, 0, -1, 0, 0}, {-1, 0, 2, -1, 0, 0},
                 {0, -1, -1, 2, -1, 0}, {0, 0, 0, -1, 2, -1}, {0, 0, 0, 0, -1, 2}};
    CHECK(determinant(e6) == 3);
    CHECK(determinant(IntMatrix{{2, -1}, {-3, 2}}) == 1);
    CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
    RatMatrix inv = inverse(e6);
    RatMatrix prod = multiply(to_rational(e6), inv);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) CHECK(prod[i][j] == Rational(i == j ? 1 : 0));
    CHECK_THROWS_AS(inverse(IntMatrix{{1, 2}, {2, 4}}), std::domain_error);
}

TEST_CASE("Hermite basis spans the same lattice") {
    IntMatrix gens{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}, {1, 1, 1}};
    IntMatrix h = hermite_basis(gens);
    REQUIRE(h.size() == 3);
    for (std::size_t i = 0; i < h.size(); ++i) {
        std::size_t p = 0;
        while (h[i][p] == 0) ++p;
        CHECK(h[i][p] > 0);
        for (std::size_t k = 0; k < i; ++k) CHECK((h[k][p] >= 0 && h[k][p] < h[i][p]));
    }
    for (const auto& g : gens) CHECK(in_row_lattice(h, g));
    CHECK_FALSE(in_row_lattice(IntMatrix{{2, 0}, {0, 2}}, IntVec{1, 0}));
}

TEST_CASE("Smith invariants: product equals |det| and each divides the next") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int t = 0; t < 200; ++t) {
        IntMatrix m(3, IntVec(3));
        for (auto& row : m)
            for (auto& v : row) v = d(rng);
        Int det = determinant(m);
        if (det == 0) continue;
        IntVec inv = smith_invariants(m);
        Int prod = 1;
        for (std::size_t i = 0; i < inv.size(); ++i) {
            prod *= inv[i];
            if (i + 1 < inv.size()) CHECK(inv[i + 1] % inv[i] == 0);
        }
        CHECK(prod == std::llabs(det));
    }
    CHECK(smith_invariants(IntMatrix{{2, 0}, {0, 3}}) == IntVec{1, 6});
    CHECK(smith_invariants(IntMatrix{{4, 0}, {0, 6}}) == IntVec{2, 12});
}

TEST_CASE("common denominator") {
    RatMatrix m{{Rational(1, 2), Rational(1, 3)}, {Rational(2), Rational(5, 4)}};
    CHECK(common_denominator(m) == 12);
}
