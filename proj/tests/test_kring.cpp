#include <doctest.h>

#include <charcalc/kring.hpp>
#include <charcalc/random.hpp>

#include "test_support.hpp"

using namespace charcalc;

namespace
{

KElement L(LineExponent a, long mult = 1) { return KElement::line(std::move(a), Integer(mult)); }
KElement n1(long n) { return KElement::trivial(1, Integer(n)); }

TSeries series(std::size_t m, std::vector<KElement> coeffs)
{
    TSeries s(m, static_cast<int>(coeffs.size()) - 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        s[static_cast<int>(i)] = coeffs[i];
    }
    return s;
}

// lambda_t(sum c_a L_a) = prod_a sum_j binom(c_a, j) L_a^j t^j, with the
// generalized binomial covering negative multiplicities.
TSeries lambda_oracle(const KElement &x, int order)
{
    TSeries r = TSeries::one(x.m(), order);
    for (const auto &[a, c] : x.terms()) {
        TSeries f(x.m(), order);
        for (int j = 0; j <= order; ++j) {
            LineExponent aj = a;
            for (auto &v : aj) {
                v *= j;
            }
            f[j] = KElement::line(aj, binomial(c.to_long(), j));
        }
        r = r * f;
    }
    return r;
}

// (1-t)^(-n) up to t^order by repeated multiplication with 1 + t + t^2 + ...
TSeries geometric_power(long n, int order)
{
    TSeries geo(1, order);
    for (int j = 0; j <= order; ++j) {
        geo[j] = n1(1);
    }
    TSeries r = TSeries::one(1, order);
    for (long i = 0; i < n; ++i) {
        r = r * geo;
    }
    return r;
}

} // namespace

TEST_CASE("K-ring arithmetic and rank")
{
    CHECK(L({1, 0}) * L({0, 1}) == L({1, 1}));
    CHECK((L({1}) - n1(1)) * (L({1}) - n1(1)) == L({2}) - L({1}, 2) + n1(1));
    const KElement x = L({2}, 3) - L({-1}) + n1(4);
    CHECK(x * KElement::unit(1) == x);
    CHECK(rank(L({1, 0}) + L({0, 1})) == Integer(2));
    CHECK(rank(L({1}) - n1(1)) == Integer(0));
    CHECK(rank(L({0}, 3)) == Integer(3));
    CHECK((L({1}) - L({1})).is_zero());
    CHECK_THROWS_AS(L({1}) + L({1, 0}), dimension_mismatch);
    CHECK(x.pow(0) == KElement::unit(1));
    CHECK(x.pow(3) == x * x * x);
}

TEST_CASE("K-element rendering")
{
    CHECK((L({2}) - n1(1)).str() == "L(2) - 1");
    CHECK((L({1, 0}, 2) - L({0, 1})).str() == "2*L(1,0) - L(0,1)");
    CHECK(KElement::zero(2).str() == "0");
    CHECK((-L({-1})).str() == "-L(-1)");
    CHECK(n1(-3).str() == "-3");
}

TEST_CASE("lambda series")
{
    for (long n = 0; n <= 5; ++n) {
        TSeries expect(1, 6);
        for (int i = 0; i <= 6; ++i) {
            expect[i] = n1(binomial(n, i).to_long());
        }
        CHECK(lambda_series(n1(n), 6) == expect);
    }
    CHECK(lambda_series(L({1}) + L({2}), 2) == series(1, {n1(1), L({1}) + L({2}), L({3})}));
    CHECK(lambda_series(n1(-1), 3) == series(1, {n1(1), n1(-1), n1(1), n1(-1)}));
    CHECK(lambda_series(n1(-1), 3).str() == "1 - t + t^2 - t^3");
    CHECK_THROWS_AS(lambda_series(n1(1), 0), std::invalid_argument);
}

TEST_CASE("lambda series agrees with the binomial oracle on random virtual elements")
{
    BundleGenerator gen(5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = static_cast<std::size_t>(gen.uniform(1, 3));
        const KElement x = gen.virtual_element(m);
        CHECK(lambda_series(x, 6) == lambda_oracle(x, 6));
    }
}

TEST_CASE("gamma series")
{
    for (int a = -3; a <= 3; ++a) {
        const KElement r = L({a}) - n1(1);
        for (int t = 1; t <= 8; ++t) {
            TSeries expect = TSeries::one(1, t);
            expect[1] = r;
            CHECK(gamma_series(r, t) == expect);
        }
    }
    for (long n = 0; n <= 6; ++n) {
        const TSeries g = gamma_series(n1(n), 2);
        CHECK(g == series(1, {n1(1), n1(n), n1(binomial(n + 1, 2).to_long())}));
        CHECK(gamma_series(n1(n), 5) == geometric_power(n, 5));
    }
    CHECK(gamma_series(KElement::zero(2), 4) == TSeries::one(2, 4));
}

TEST_CASE("gamma operations")
{
    const KElement r = L({1}) - n1(1);
    CHECK(gamma_k(r, 1) == r);
    CHECK(gamma_k(r, 2).is_zero());
    CHECK(gamma_k(r, 0) == n1(1));
    CHECK(gamma_k(L({3}) + L({-2}, 2), 0) == n1(1));
    // gamma^1 is the identity; on reduced elements that is x - rank(x)
    const KElement x = L({2}, 2) - L({1}) + n1(3);
    CHECK(gamma_k(x, 1) == x);
    CHECK(gamma_k(x - n1(4), 1) == x - KElement::trivial(1, rank(x)));
}

TEST_CASE("Newton series operations")
{
    const KElement r = L({1}) - n1(1);
    const OperationSeries ident{{Integer(1)}};
    const OperationSeries square{{Integer(0), Integer(1)}};
    const OperationSeries zero{{}};
    CHECK(newton_series_operation(ident, r, 4) == r);
    CHECK(newton_series_operation(square, r, 4) == r * r);
    CHECK(newton_series_operation(zero, r, 4).is_zero());

    const OperationSeries a2 = OperationSeries::adams(2);
    CHECK(a2.coefficients == std::vector<Integer>{Integer(2), Integer(1)});
}

TEST_CASE("Newton series operations are additive")
{
    BundleGenerator gen(17);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t m = static_cast<std::size_t>(gen.uniform(1, 2));
        const KElement x = gen.virtual_element(m, 3);
        const KElement y = gen.virtual_element(m, 3);
        OperationSeries f;
        for (int i = 0; i < 4; ++i) {
            f.coefficients.emplace_back(static_cast<long>(gen.uniform(-3, 3)));
        }
        const KElement xr = x - KElement::trivial(m, rank(x));
        const KElement yr = y - KElement::trivial(m, rank(y));
        CHECK(newton_series_operation(f, xr + yr, 4) ==
              newton_series_operation(f, xr, 4) + newton_series_operation(f, yr, 4));
    }
}

TEST_CASE("Adams operations")
{
    CHECK(adams_newton(L({1}) - n1(1), 2) == L({2}) - n1(1));
    const KElement e = L({1, 0}) + L({0, 1}) - KElement::trivial(2, Integer(2));
    CHECK(adams_newton(e, 2) == L({2, 0}) + L({0, 2}) - KElement::trivial(2, Integer(2)));
    CHECK(adams_split(e, 2) == adams_newton(e, 2));
    for (int k = 1; k <= 5; ++k) {
        CHECK(adams_newton(n1(4), k) == n1(4));
    }
    CHECK(adams_split(L({1, 1}), 3) == L({3, 3}));
    CHECK(adams_split(L({1}) - n1(1), 2) == L({2}) - n1(1));
    const KElement x = L({2}, 2) - L({-1});
    CHECK(adams_split(x, 1) == x);
    CHECK_THROWS_AS(adams_split(x, 0), std::invalid_argument);
}

TEST_CASE("Adams routes agree and split Adams is a ring map")
{
    BundleGenerator gen(99);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t m = static_cast<std::size_t>(gen.uniform(1, 3));
        const KElement x = gen.virtual_element(m);
        const KElement y = gen.virtual_element(m);
        for (int k = 1; k <= 5; ++k) {
            CHECK(adams_newton(x, k) == adams_split(x, k));
            CHECK(adams_split(x * y, k) == adams_split(x, k) * adams_split(y, k));
            CHECK(adams_split(x + y, k) == adams_split(x, k) + adams_split(y, k));
        }
        CHECK(adams_split(adams_split(x, 2), 3) == adams_split(x, 6));
        CHECK(rank(x + y) == rank(x) + rank(y));
        CHECK(rank(x * y) == rank(x) * rank(y));
    }
}

TEST_CASE("multiplicativity of lambda and gamma")
{
    BundleGenerator gen(3);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t m = static_cast<std::size_t>(gen.uniform(1, 3));
        const KElement x = gen.effective(m, 4);
        const KElement y = gen.effective(m, 4);
        const int t = gen.uniform(1, 6);
        CHECK(lambda_series(x + y, t) == lambda_series(x, t) * lambda_series(y, t));
        CHECK(gamma_series(x + y, t) == gamma_series(x, t) * gamma_series(y, t));
        const KElement v = gen.virtual_element(m);
        CHECK(lambda_series(x + v, t) == lambda_series(x, t) * lambda_series(v, t));
    }
}

TEST_CASE("K-theory Chern classes")
{
    CHECK(ktheory_chern(L({1}), 1) == n1(1) - L({1}));
    CHECK(ktheory_chern(L({3}), 2).is_zero());
    CHECK(ktheory_chern(L({1}), 0) == n1(1));
    const KElement e = L({1, 0}) + L({0, 1});
    CHECK(ktheory_chern(e, 1) == KElement::trivial(2, Integer(2)) - L({1, 0}) - L({0, 1}));
    CHECK(ktheory_chern(e, 1).str() == "-L(1,0) - L(0,1) + 2");
    CHECK_THROWS_AS(ktheory_chern(L({1}) - n1(1), 1), not_effective);

    // Whitney sum
    BundleGenerator gen(8);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t m = static_cast<std::size_t>(gen.uniform(1, 3));
        const KElement f = gen.effective(m);
        const KElement g = gen.effective(m);
        const int n = static_cast<int>(rank(f + g).to_long());
        for (int i = 0; i <= n + 1; ++i) {
            KElement expect = KElement::zero(m);
            for (int j = 0; j <= i; ++j) {
                expect += ktheory_chern(f, j) * ktheory_chern(g, i - j);
            }
            CHECK(ktheory_chern(f + g, i) == expect);
        }
    }
}

TEST_CASE("series inverse and rendering")
{
    const TSeries s = lambda_series(L({1}) + L({2}), 3);
    CHECK((s * s.inverse()) == TSeries::one(1, 3));
    CHECK(s.str() == "1 + (L(2) + L(1))*t + L(3)*t^2");
    CHECK(lambda_series(-L({1}), 3).str() == "1 - L(1)*t + L(2)*t^2 - L(3)*t^3");
    CHECK(gamma_series(n1(3), 3).str() == "1 + 3*t + 6*t^2 + 10*t^3");
}

TEST_CASE("pullback of line classes")
{
    const std::vector<std::vector<int>> swap{{0, 1}, {1, 0}};
    CHECK(pullback_lines(L({2, 5}), swap) == L({5, 2}));
    const std::vector<std::vector<int>> collapse{{1, 1}, {0, 0}};
    CHECK(pullback_lines(L({1, 0}) + L({0, 1}), collapse) == L({1, 1}) + KElement::unit(2));
    BundleGenerator gen(1);
    for (int trial = 0; trial < 20; ++trial) {
        const KElement x = gen.virtual_element(2);
        const KElement y = gen.virtual_element(2);
        const auto mat = gen.matrix(2);
        CHECK(pullback_lines(x * y, mat) == pullback_lines(x, mat) * pullback_lines(y, mat));
        CHECK(pullback_lines(adams_split(x, 3), mat) == adams_split(pullback_lines(x, mat), 3));
    }
}
