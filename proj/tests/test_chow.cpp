#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "cobinv/chow.hpp"
#include "cobinv/lazard.hpp"

using namespace cobinv;

namespace {

std::uint64_t seed_from_env() {
    if (const char* s = std::getenv("COBINV_SEED")) return std::strtoull(s, nullptr, 10);
    return 20240601;
}

}  // namespace

TEST_CASE("projective spaces") {
    FglContext ctx(Config::with_degree(6));

    VarietyPtr pt = make_projective_space(ctx, 0);
    CHECK(pt->dim == 0);
    CHECK(pt->tangent.rank() == 0);
    CHECK(pt->pres->degree(GradedPoly(pt->pres->alphabet(), 7)) == 7);

    VarietyPtr p1 = make_projective_space(ctx, 1);
    GradedPoly h = p1->pres->gen(0);
    CHECK(p1->pres->normalize(h * h).is_zero());
    CHECK(p1->pres->degree(h) == 1);

    VarietyPtr p4 = make_projective_space(ctx, 4);
    CHECK(chern_number(ctx, *p4, {4}) == -5);
    for (int n = 1; n <= 6; ++n) {
        VarietyPtr pn = make_projective_space(ctx, n);
        CHECK(chern_number(ctx, *pn, Partition{n}) == -(n + 1));
    }
}

TEST_CASE("products") {
    FglContext ctx(Config::with_degree(6));
    LazardContext laz(ctx);

    VarietyPtr pt = make_projective_space(ctx, 0);
    VarietyPtr p2 = make_projective_space(ctx, 2);
    VarietyPtr both = make_product(ctx, pt, p2);
    CHECK(laz.class_of(both) == laz.class_of(p2));

    VarietyPtr p1 = make_projective_space(ctx, 1);
    VarietyPtr p1p1 = make_product(ctx, p1, p1);
    GradedPoly h1 = GradedPoly::symbol(p1p1->pres->alphabet(), "h1");
    GradedPoly h2 = GradedPoly::symbol(p1p1->pres->alphabet(), "h2");
    CHECK(p1p1->pres->degree(h1 * h2) == 1);
    CHECK(p1p1->pres->degree(h1 * h1) == 0);

    // Chern numbers of the product surface: the class is the square of the
    // curve class, so c_(2) = 0 and c_(1,1) = 4; the Euler number 4 pins the
    // pair down.
    CHECK(chern_number(ctx, *p1p1, {2}) == 0);
    CHECK(chern_number(ctx, *p1p1, {1, 1}) == 4);
    GradedPoly cls = laz.class_of(p1p1);
    CHECK(cls == laz.class_of(p1) * laz.class_of(p1));
    CHECK(LazardContext::genus(cls, LazardContext::Genus::euler) == 4);
}

TEST_CASE("projective bundles and Milnor hypersurfaces") {
    FglContext ctx(Config::with_degree(8));
    LazardContext laz(ctx);

    // Trivial rank r over the point is projective space.
    VarietyPtr pt = make_projective_space(ctx, 0);
    KClass triv;
    triv.add(3, pt->pres->zero());
    VarietyPtr p2 = make_projective_bundle(ctx, pt, triv, 3);
    CHECK(p2->dim == 2);
    CHECK(laz.class_of(p2) == laz.class_of(make_projective_space(ctx, 2)));

    CHECK(chern_number(ctx, *make_milnor(ctx, 2, 2), {3}) == 6);
    CHECK(chern_number(ctx, *make_milnor(ctx, 1, 2), {2}) == 0);
    CHECK(chern_number(ctx, *make_milnor(ctx, 2, 4), {5}) == 15);
    for (int m = 2; m <= 3; ++m)
        for (int n = m; m + n <= 7; ++n)
            CHECK(chern_number(ctx, *make_milnor(ctx, m, n), Partition{m + n - 1}) ==
                  binomial(m + n, m));
    for (int n = 2; n <= 6; ++n)
        CHECK(chern_number(ctx, *make_milnor(ctx, 1, n), Partition{n}) == 0);
}

TEST_CASE("tower pushforward matches the Segre expansion") {
    FglContext ctx(Config::with_degree(8));
    VarietyPtr H = make_milnor(ctx, 2, 3);  // P(U_2 + 1) over P^2, rank 3
    const auto& pres = *H->pres;
    std::uint32_t xi = static_cast<std::uint32_t>(pres.generators()[H->fiber_level]);
    GradedPoly xi_poly = pres.gen(H->fiber_level);
    GradedPoly h = pres.gen(0);

    // c(U_2 + 1) = (1+h)^{-1}, so s(U_2 + 1) = 1 + h; pi_*(xi^{2+i}) = s_i.
    auto push = [&](const GradedPoly& u) {
        return pres.normalize(u).coefficient_of(xi, H->fiber_rank - 1);
    };
    CHECK(push(xi_poly.pow(2)) == GradedPoly(pres.alphabet(), 1));
    CHECK(push(xi_poly.pow(3)) == pres.normalize(h));
    CHECK(push(xi_poly.pow(4)).is_zero());
    CHECK(push(xi_poly.pow(1)).is_zero());

    // Degree factors through the pushforward.
    GradedPoly u = pres.normalize(h * h * xi_poly.pow(2));
    VarietyPtr base = H->base;
    CHECK(pres.degree(u) == base->pres->degree(push(u)));
}

TEST_CASE("multiplicative class basics") {
    FglContext ctx(Config::with_degree(6));

    VarietyPtr p2 = make_projective_space(ctx, 2);
    KClass triv;
    triv.add(4, p2->pres->zero());
    CHECK(cf_class(*p2, triv) == GradedPoly(p2->pres->alphabet(), 1));

    // P(-3 O(1)) on P^2 = 1 - 3 b1 h + (6 b1^2 - 3 b2) h^2.
    KClass line3;
    line3.add(-3, p2->pres->gen(0));
    GradedPoly p = cf_class(*p2, line3);
    auto al = p2->pres->alphabet();
    GradedPoly h = p2->pres->gen(0);
    GradedPoly b1 = GradedPoly::symbol(al, "b1");
    GradedPoly b2 = GradedPoly::symbol(al, "b2");
    GradedPoly expect = GradedPoly(al, 1) - (b1 * h).scaled(3) +
                        (b1 * b1).scaled(6) * (h * h) - b2.scaled(3) * (h * h);
    CHECK(p == expect);
    CHECK(chern_number(ctx, *p2, {1, 1}) == 6);
    CHECK(chern_number(ctx, *p2, {1}) == 0);  // off-dimension partitions vanish

    // Length beyond the rank kills the coefficient for honest bundles.
    KClass two_lines;
    two_lines.add(1, p2->pres->gen(0)).add(1, p2->pres->gen(0).scaled(2));
    GradedPoly cf = cf_class(*p2, two_lines);
    CHECK(chern_coeff(*p2, cf, {1, 1, 1}).is_zero());

    // Whitney for a virtual difference: P(E - E) = 1.
    KClass diff;
    diff.add(1, p2->pres->gen(0)).add(-1, p2->pres->gen(0));
    CHECK(cf_class(*p2, diff) == GradedPoly(al, 1));
}

TEST_CASE("twisted pushforward of twisted hyperplane powers") {
    FglContext ctx(Config::with_degree(6));
    LazardContext laz(ctx);
    VarietyPtr p3 = make_projective_space(ctx, 3);
    GradedPoly w = twisted_c1(ctx, *p3, p3->pres->gen(0));
    GradedPoly power(p3->pres->alphabet(), 1);
    for (int j = 0; j <= 3; ++j) {
        if (j) power = p3->pres->normalize(power * w);
        CHECK(fund_class_of(ctx, *p3, power) ==
              laz.class_of(laz.projective_space(3 - j)));
    }
}

TEST_CASE("normal form is canonical between reduction orders") {
    FglContext ctx(Config::with_degree(6));
    std::mt19937_64 rng(seed_from_env() + 7);
    std::uniform_int_distribution<int> coeff(-9, 9), exp(0, 6);

    VarietyPtr H = make_milnor(ctx, 2, 3);
    const auto& pres = *H->pres;
    std::uint32_t h = static_cast<std::uint32_t>(pres.generators()[0]);
    std::uint32_t xi = static_cast<std::uint32_t>(pres.generators()[1]);
    for (int trial = 0; trial < 40; ++trial) {
        GradedPoly p(pres.alphabet());
        for (int t = 0; t < 4; ++t) {
            Mono m;
            int eh = exp(rng), ex = exp(rng);
            if (eh) m.emplace_back(h, eh);
            if (ex) m.emplace_back(xi, ex);
            std::sort(m.begin(), m.end());
            p.add_term(m, coeff(rng));
        }
        CHECK(pres.normalize(p) == pres.normalize_reversed(p));
        // Idempotence.
        CHECK(pres.normalize(pres.normalize(p)) == pres.normalize(p));
    }
}
