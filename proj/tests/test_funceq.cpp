#include "qeuler/funceq.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace qeuler;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("gamma-type solution collapses to Gamma_q", "[funceq]") {
    const QParam q(0.5);
    const FESolution f = solve_gamma_type(QuotientSpec(1, 1, {0.0}, {}), q);
    for (double x : {0.5, 1.0, 2.5, 7.3})
        CHECK_THAT(f(x), WithinRel(gamma_q(x, q).value, 1e-13));
}

TEST_CASE("gamma-type solution scales to B_q", "[funceq]") {
    const QParam q(0.5);
    const double y = 1.7;
    const FESolution f = solve_gamma_type(QuotientSpec(1, 1, {0.0}, {y}), q);
    for (double x : {0.4, 1.0, 3.1})
        CHECK_THAT(f(x) * beta_q(1.0, y, q), WithinRel(beta_q(x, y, q), 1e-12));
}

TEST_CASE("gamma-type initial condition and residual", "[funceq]") {
    const QParam q(0.5);
    const FESolution f = solve_gamma_type(QuotientSpec(2, 2, {0.5}, {1.5}), q);
    CHECK_THAT(f(2.0), WithinAbs(1.0, 1e-13));
    for (double x : {0.5, 1.0, 3.7})
        CHECK_THAT(f.residual(x), WithinAbs(0.0, 1e-12));
}

TEST_CASE("reciprocal-type solution and G_q", "[funceq]") {
    const QParam q(0.5);
    const FESolution inv_g = solve_reciprocal_type(QuotientSpec(1, 1, {0.0}, {}), q);
    const FESolution just_g = solve_reciprocal_type(QuotientSpec(1, 1, {}, {0.0}), q);
    for (double x : {0.5, 1.0, 2.5}) {
        CHECK_THAT(inv_g(x), WithinRel(1.0 / g_q_func(x, q), 1e-13));
        CHECK_THAT(just_g(x), WithinRel(g_q_func(x, q), 1e-13));
    }
    const FESolution f2 = solve_reciprocal_type(QuotientSpec(2, 1, {0.0}, {1.0}), q);
    for (double x : {0.3, 1.0, 2.6})
        CHECK_THAT(f2.residual(x), WithinAbs(0.0, 1e-12));
}

TEST_CASE("random spec residuals", "[funceq]") {
    std::mt19937 rng(7u);
    std::uniform_real_distribution<double> offset(0.0, 3.0);
    std::uniform_real_distribution<double> kdist(0.25, 2.0);
    std::uniform_real_distribution<double> wdist(0.5, 2.0);
    std::uniform_real_distribution<double> xdist(0.1, 8.0);
    std::uniform_int_distribution<int> cnt(0, 3);
    std::uniform_int_distribution<int> signd(0, 1);
    for (int trial = 0; trial < 10; ++trial) {
        const double k = kdist(rng) * (signd(rng) ? 1.0 : -1.0);
        const double w = wdist(rng);
        int r = cnt(rng), s = cnt(rng);
        if (r + s == 0) r = 1;
        std::vector<double> a(r), b(s);
        for (double& v : a) v = offset(rng);
        for (double& v : b) v = offset(rng);
        const QuotientSpec spec(k, w, a, b);
        for (double qv : {0.3, 0.7}) {
            const FESolution fg = solve_gamma_type(spec, QParam(qv));
            const FESolution fr = solve_reciprocal_type(spec, QParam(qv));
            CHECK_THAT(fg(w), WithinAbs(1.0, 1e-13));
            for (int i = 0; i < 4; ++i) {
                const double x = xdist(rng);
                CHECK_THAT(fg.residual(x), WithinAbs(0.0, 1e-11));
                CHECK_THAT(fr.residual(x), WithinAbs(0.0, 1e-11));
            }
        }
    }
}

TEST_CASE("w-reduction lemma", "[funceq]") {
    // g(t) = [w]_q^{k(r-s)(1-t)} F(w t) solves the w=1 equation at base q^w
    // with offsets a/w, b/w
    const double k = 2.0, w = 2.0;
    const QParam q(0.5);
    const FESolution f = solve_gamma_type(QuotientSpec(k, w, {0.5}, {1.5}), q);
    const QParam qw(std::pow(q.q(), w));
    const auto g = [&](double t) {
        const double rs = 0.0;  // r = s = 1
        return std::pow(q_bracket(w, q), k * rs * (1.0 - t)) * f(w * t);
    };
    for (double t : {0.4, 0.8, 1.6}) {
        const double step = std::pow(q_bracket(t + 0.25, qw) / q_bracket(t + 0.75, qw), k);
        CHECK_THAT(g(t + 1.0) / (step * g(t)) - 1.0, WithinAbs(0.0, 1e-11));
    }
}

TEST_CASE("q <-> 1/q transport of solutions", "[funceq]") {
    // h(x) = q^{k(w-x)/(2w) ((r-s)(x-2) + 2(A-B))} F_q(x) equals F_{1/q}(x)
    const QParam q(0.5);
    const double k = 1.0, w = 1.0;
    const std::vector<double> a{0.0, 2.0}, b{1.0};
    const QuotientSpec spec(k, w, a, b);
    const FESolution fq = solve_gamma_type(spec, q);
    const FESolution fp = solve_gamma_type(spec, q.reciprocal());
    const double A = 2.0, B = 1.0;
    const double rs = 1.0;
    for (double x : {0.6, 1.7, 3.4}) {
        const double expo = k * (w - x) / (2.0 * w) * (rs * (x - 2.0) + 2.0 * (A - B));
        const double h = std::pow(q.q(), expo) * fq(x);
        CHECK_THAT(h, WithinRel(fp(x), 1e-10));
    }
}

TEST_CASE("sandwich oracle, gamma type", "[funceq]") {
    const QParam q05(0.5), q03(0.3);
    const QuotientSpec plain(1, 1, {0.0}, {});

    CHECK_THAT(sandwich_oracle_gamma(plain, q05, 0.5, 200),
               WithinRel(gamma_q(0.5, q05).value, 1e-10));
    // x = w gives exactly 1 at every truncation length
    for (std::size_t n : {1u, 7u, 50u})
        CHECK(sandwich_oracle_gamma(plain, q05, 1.0, n) == 1.0);

    const QuotientSpec ab(1, 1, {0.0}, {1.0});
    CHECK_THAT(sandwich_oracle_gamma(ab, q03, 0.5, 100),
               WithinRel(solve_gamma_type(ab, q03)(0.5), 1e-10));

    SECTION("convergence is monotone in n on the test set") {
        const FESolution closed = solve_gamma_type(ab, q05);
        const double target = closed(0.5);
        double prev = 1e300;
        for (std::size_t n : {25u, 50u, 100u, 200u}) {
            const double err = std::fabs(sandwich_oracle_gamma(ab, q05, 0.5, n) - target);
            CHECK(err <= prev);
            prev = err;
        }
    }

    CHECK_THROWS_AS(sandwich_oracle_gamma(plain, q05, 1.5, 100), domain_error);
    CHECK_THROWS_AS(sandwich_oracle_gamma(plain, QParam(2.0), 0.5, 100), domain_error);
    CHECK_THROWS_AS(sandwich_oracle_gamma(plain, q05, 0.5, 2000000), cap_exceeded);
}

TEST_CASE("sandwich oracle, reciprocal type", "[funceq]") {
    const QParam q05(0.5), q04(0.4);
    const QuotientSpec plain(1, 1, {0.0}, {});
    const FESolution closed = solve_reciprocal_type(plain, q05);

    CHECK_THAT(sandwich_oracle_reciprocal(plain, q05, 1.0, 100), WithinRel(closed(1.0), 1e-10));
    CHECK_THAT(sandwich_oracle_reciprocal(plain, q05, 2.5, 100), WithinRel(closed(2.5), 1e-9));
    CHECK_THAT(sandwich_oracle_reciprocal(plain, q05, 2.5, 100),
               WithinRel(1.0 / g_q_func(2.5, q05), 1e-9));

    const QuotientSpec k2(2, 1, {0.0}, {0.5});
    CHECK_THAT(sandwich_oracle_reciprocal(k2, q04, 0.7, 150),
               WithinRel(solve_reciprocal_type(k2, q04)(0.7), 1e-9));

    CHECK_THROWS_AS(sandwich_oracle_reciprocal(plain, QParam(3.0), 1.0, 100), domain_error);
}
