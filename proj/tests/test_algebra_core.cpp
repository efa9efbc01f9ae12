#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "cobinv/fgl.hpp"
#include "cobinv/graded_poly.hpp"
#include "cobinv/intlattice.hpp"
#include "cobinv/series.hpp"

using namespace cobinv;

namespace {

AlphabetPtr test_alpha() {
    return make_alphabet({{"b1", -1, false},
                          {"b2", -2, false},
                          {"b3", -3, false},
                          {"h", 1, false},
                          {"v", 1, true}});
}

std::uint64_t seed_from_env() {
    if (const char* s = std::getenv("COBINV_SEED")) return std::strtoull(s, nullptr, 10);
    return 20240601;
}

GradedPoly random_poly(std::mt19937_64& rng, const AlphabetPtr& alpha) {
    std::uniform_int_distribution<int> nterms(0, 5), exp(0, 3), coeff(-9, 9);
    GradedPoly p(alpha);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Mono m;
        for (std::uint32_t i = 0; i < alpha->size(); ++i) {
            int e = exp(rng) - (alpha->at(i).laurent ? 1 : 0);
            if (alpha->at(i).laurent == false && e < 0) e = 0;
            if (e != 0) m.emplace_back(i, e);
        }
        p.add_term(m, coeff(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("additive inverse cancels") {
    auto alpha = test_alpha();
    GradedPoly b1 = GradedPoly::symbol(alpha, "b1");
    CHECK((b1.scaled(2) + b1.scaled(-2)).is_zero());
}

TEST_CASE("Laurent identity v * v^-1 = 1") {
    auto alpha = test_alpha();
    GradedPoly v = GradedPoly::symbol(alpha, "v", 1);
    GradedPoly vinv = GradedPoly::symbol(alpha, "v", -1);
    CHECK(v * vinv == GradedPoly(alpha, 1));
}

TEST_CASE("binomial square") {
    auto alpha = test_alpha();
    GradedPoly b1 = GradedPoly::symbol(alpha, "b1");
    GradedPoly h = GradedPoly::symbol(alpha, "h");
    GradedPoly f = GradedPoly(alpha, 1) + b1 * h;
    GradedPoly expect = GradedPoly(alpha, 1) + (b1 * h).scaled(2) + (b1 * b1 * h * h);
    CHECK(f.pow(2) == expect);
}

TEST_CASE("negative exponent of non-Laurent symbol rejected") {
    auto alpha = test_alpha();
    GradedPoly p(alpha);
    CHECK_THROWS_AS(p.add_term(Mono{{0, -1}}, 1), Error);
}

TEST_CASE("alphabet mismatch rejected") {
    auto a1 = test_alpha();
    auto a2 = make_alphabet({{"z", 1, false}});
    GradedPoly p = GradedPoly::symbol(a1, "b1");
    GradedPoly q = GradedPoly::symbol(a2, "z");
    CHECK_THROWS_AS(p * q, AlphabetMismatch);
}

TEST_CASE("exact division") {
    auto alpha = test_alpha();
    GradedPoly b1 = GradedPoly::symbol(alpha, "b1");
    GradedPoly b2 = GradedPoly::symbol(alpha, "b2");

    CHECK(b2.scaled(4).exact_div(2) == b2.scaled(2));
    CHECK_THROWS_AS((b1.scaled(2) + b2.scaled(3)).exact_div(2), DivisibilityError);
    // 6 b1^2 - 3 b2 over 3.
    GradedPoly p = (b1 * b1).scaled(6) - b2.scaled(3);
    CHECK(p.exact_div(3) == (b1 * b1).scaled(2) - b2);
}

TEST_CASE("ring axioms on randomized triples") {
    auto alpha = test_alpha();
    std::mt19937_64 rng(seed_from_env());
    for (int trial = 0; trial < 60; ++trial) {
        GradedPoly a = random_poly(rng, alpha);
        GradedPoly b = random_poly(rng, alpha);
        GradedPoly c = random_poly(rng, alpha);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("degree additivity of homogeneous products") {
    auto alpha = test_alpha();
    std::mt19937_64 rng(seed_from_env() + 1);
    std::uniform_int_distribution<int> coeff(-5, 5);
    // Random homogeneous elements of degree -2 and -3 in the b's.
    GradedPoly b1 = GradedPoly::symbol(alpha, "b1");
    GradedPoly b2 = GradedPoly::symbol(alpha, "b2");
    GradedPoly b3 = GradedPoly::symbol(alpha, "b3");
    for (int trial = 0; trial < 20; ++trial) {
        GradedPoly x = (b1 * b1).scaled(coeff(rng)) + b2.scaled(coeff(rng));
        GradedPoly y = (b1 * b2).scaled(coeff(rng)) + b3.scaled(coeff(rng)) +
                       (b1 * b1 * b1).scaled(coeff(rng));
        CHECK(x.is_homogeneous(-2));
        CHECK(y.is_homogeneous(-3));
        GradedPoly xy = x * y;
        if (!xy.is_zero()) {
            CHECK(xy.is_homogeneous(-5));
            CHECK(*xy.dim() == 5);
        }
    }
}

TEST_CASE("series composition basics") {
    auto alpha = test_alpha();
    GradedPoly b1 = GradedPoly::symbol(alpha, "b1");
    TruncSeries x = TruncSeries::identity("x", 1, 8, alpha);

    // f = x + x^2, g = 2x.
    TruncSeries f = x;
    f.set_coeff(2, GradedPoly(alpha, 1));
    TruncSeries g = x.scaled(2);
    TruncSeries fg = f.compose(g);
    CHECK(fg.coeff(1) == GradedPoly(alpha, 2));
    CHECK(fg.coeff(2) == GradedPoly(alpha, 4));
    for (std::size_t j = 3; j < 8; ++j) CHECK(fg.coeff(j).is_zero());

    // Identity outer series returns the inner one.
    TruncSeries any = x;
    any.set_coeff(3, b1);
    CHECK(x.compose(any) == any);

    TruncSeries bad("x", 1, 8, alpha);
    bad.set_coeff(0, GradedPoly(alpha, 1));
    CHECK_THROWS_AS(f.compose(bad), Error);
}

TEST_CASE("compositional inverse") {
    auto alpha = test_alpha();
    GradedPoly b1 = GradedPoly::symbol(alpha, "b1");
    TruncSeries x = TruncSeries::identity("x", 1, 8, alpha);

    CHECK(x.comp_inverse() == x);

    // f = x + b1 x^2: inverse starts x - b1 x^2 + 2 b1^2 x^3.
    TruncSeries f = x;
    f.set_coeff(2, b1);
    TruncSeries g = f.comp_inverse();
    CHECK(g.coeff(2) == -b1);
    CHECK(g.coeff(3) == (b1 * b1).scaled(2));
    CHECK(f.compose(g) == x);
    CHECK(g.compose(f) == x);

    // Integer specialization b1 = 1: signed sequence 1, -1, 2, -5, 14 appears.
    TruncSeries fi = x;
    fi.set_coeff(2, GradedPoly(alpha, 1));
    TruncSeries gi = fi.comp_inverse();
    // Independent oracle: solve the coefficients by brute force from f(g) = x.
    std::vector<BigInt> expect{0, 1, -1, 2, -5, 14, -42, 132};
    for (std::size_t j = 1; j < 8; ++j) CHECK(gi.coeff(j) == GradedPoly(alpha, expect[j]));
}

TEST_CASE("compositional inverse of random unit-linear series") {
    auto alpha = test_alpha();
    std::mt19937_64 rng(seed_from_env() + 2);
    std::uniform_int_distribution<int> coeff(-4, 4);
    GradedPoly b1 = GradedPoly::symbol(alpha, "b1");
    GradedPoly b2 = GradedPoly::symbol(alpha, "b2");
    TruncSeries x = TruncSeries::identity("x", 1, 9, alpha);
    for (int trial = 0; trial < 10; ++trial) {
        TruncSeries f = x;
        for (std::size_t j = 2; j < 9; ++j)
            f.set_coeff(j, b1.scaled(coeff(rng)) + b2.scaled(coeff(rng)) +
                                GradedPoly(alpha, coeff(rng)));
        TruncSeries g = f.comp_inverse();
        CHECK(f.compose(g) == x);
        CHECK(g.compose(f) == x);
    }
}

TEST_CASE("series reciprocal") {
    auto alpha = test_alpha();
    GradedPoly b1 = GradedPoly::symbol(alpha, "b1");
    GradedPoly b2 = GradedPoly::symbol(alpha, "b2");
    TruncSeries one("h", 1, 4, alpha);
    one.set_coeff(0, GradedPoly(alpha, 1));
    CHECK(one.reciprocal() == one);

    TruncSeries f = one;
    f.set_coeff(1, b1);
    TruncSeries r = f.reciprocal();
    CHECK(r.coeff(1) == -b1);
    CHECK(r.coeff(2) == b1 * b1);
    CHECK(r.coeff(3) == -(b1 * b1 * b1));

    TruncSeries g = one;
    g.set_coeff(1, b1);
    g.set_coeff(2, b2);
    TruncSeries rg = g.reciprocal();
    CHECK(rg.coeff(0) == GradedPoly(alpha, 1));
    CHECK(rg.coeff(1) == -b1);
    CHECK(rg.coeff(2) == b1 * b1 - b2);
    // Multiply back.
    TruncSeries prod = g * rg;
    CHECK(prod.coeff(0) == GradedPoly(alpha, 1));
    for (std::size_t j = 1; j < 4; ++j) CHECK(prod.coeff(j).is_zero());

    TruncSeries bad("h", 1, 4, alpha);
    bad.set_coeff(0, GradedPoly(alpha, 2));
    CHECK_THROWS_AS(bad.reciprocal(), Error);
}

TEST_CASE("lattice solver") {
    // Z-span of (2,0,1) and (0,3,1).
    std::vector<std::vector<BigInt>> gens{{2, 0, 1}, {0, 3, 1}};
    LatticeSolver solver(gens);
    CHECK(solver.rank() == 2);

    auto c = solver.solve({2, 3, 2});
    REQUIRE(c.has_value());
    CHECK((*c)[0] == 1);
    CHECK((*c)[1] == 1);
    CHECK_FALSE(solver.solve({1, 0, 0}).has_value());
    CHECK_FALSE(solver.solve({2, 0, 0}).has_value());

    // Dependent generators collapse in rank.
    std::vector<std::vector<BigInt>> dep{{1, 2}, {2, 4}, {0, 1}};
    CHECK(rank_of(dep) == 2);
}

TEST_CASE("Laurent window arithmetic") {
    auto alpha = test_alpha();
    LaurentSeries a = LaurentSeries::monomial("x", -1, GradedPoly(alpha, 1), 5);
    LaurentSeries b = LaurentSeries::monomial("x", 1, GradedPoly(alpha, 1), 5);
    LaurentSeries p = a * b;
    CHECK(p.coeff(0) == GradedPoly(alpha, 1));
    CHECK(p.lo() == 0);
    CHECK_THROWS_AS(p.coeff(100), WindowError);
    CHECK(p.coeff(-7).is_zero());
}
