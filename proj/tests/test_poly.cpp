#include <doctest.h>

#include <map>
#include <random>

#include <charcalc/poly.hpp>

#include "test_support.hpp"

using namespace charcalc;
using charcalc::test::rat;

namespace
{

using P = Poly<Rational>;

PolySpace space_x(std::size_t n, int weight, Degree trunc)
{
    return PolySpace{VarTable::uniform("x", n, weight), trunc};
}

P mono(const PolySpace &s, Exponents e, Rational c = Rational(1)) { return P::monomial(s, std::move(e), c); }

} // namespace

TEST_CASE("truncated multiplication")
{
    const PolySpace s2 = space_x(1, 2, 4);
    const P one = P::one(s2);
    const P x = P::variable(s2, 0);
    CHECK((one + x) * (one + x) == one + Integer(2) * x + mono(s2, {2}));
    CHECK(((one + x) * (one + x)).str() == "1 + 2*x1 + x1^2");
    CHECK(mono(s2, {2}) * mono(s2, {2}) == P(s2));

    // with a weight-1 variable the cube survives D = 4
    const PolySpace s1 = space_x(1, 1, 4);
    const P y = P::variable(s1, 0);
    const P one1 = P::one(s1);
    CHECK((one1 + y) * (one1 - y + y * y) == one1 + mono(s1, {3}));
    // at weight 2 it falls above the bound
    CHECK((one + x) * (one - x + x * x) == one);

    CHECK_THROWS_AS(x * P::variable(space_x(1, 2, 6), 0), incompatible_spaces);
    CHECK_THROWS_AS(x + P::variable(space_x(2, 2, 4), 0), incompatible_spaces);
}

TEST_CASE("inversion")
{
    const PolySpace s6 = space_x(1, 2, 6);
    const P x6 = P::variable(s6, 0);
    CHECK(poly_invert(P::one(s6) - x6) == P::one(s6) + x6 + x6.pow(2) + x6.pow(3));
    CHECK(poly_invert(P::one(s6)) == P::one(s6));

    const PolySpace s4 = space_x(1, 2, 4);
    const P x = P::variable(s4, 0);
    const P a = P::constant(s4, rat(2)) + x;
    const P inv = poly_invert(a);
    CHECK(inv * a == P::one(s4));
    CHECK(inv == P::constant(s4, rat(1, 2)) - x.scaled(rat(1, 4)) + x.pow(2).scaled(rat(1, 8)));
    CHECK(inv.str() == "1/2 - 1/4*x1 + 1/8*x1^2");

    // explicit smaller order
    CHECK(poly_invert(a, 2) == P::constant(space_x(1, 2, 2), rat(1, 2)) - P::variable(space_x(1, 2, 2), 0).scaled(rat(1, 4)));

    CHECK_THROWS_AS(poly_invert(x), not_invertible);
    const Poly<Integer> two = Poly<Integer>::constant(s4, Integer(2)) + Poly<Integer>::variable(s4, 0);
    CHECK_THROWS_AS(poly_invert(two), not_invertible);
    const PolySpace unbounded = space_x(1, 2, unbounded_degree);
    CHECK_THROWS_AS(poly_invert(P::one(unbounded) + P::variable(unbounded, 0)), not_invertible);
    CHECK(poly_invert(P::constant(unbounded, rat(-3))) == P::constant(unbounded, rat(-1, 3)));
}

TEST_CASE("inverse multiplies back to one on random units")
{
    std::mt19937_64 rng(11);
    const auto table = std::make_shared<const VarTable>(std::vector<std::string>{"a", "b"}, std::vector<int>{1, 2});
    for (int trial = 0; trial < 60; ++trial) {
        const PolySpace s{table, 2 + static_cast<Degree>(rng() % 7)};
        P a = test::random_poly(rng, s);
        a += P::constant(s, rat(static_cast<long>(rng() % 5) + 1, 3) - a.constant_term());
        CHECK(poly_invert(a) * a == P::one(s));
    }
}

TEST_CASE("substitution")
{
    const PolySpace s = space_x(2, 2, 8);
    const P x1 = P::variable(s, 0);
    const P x2 = P::variable(s, 1);
    CHECK(substitute(x1 * x1, std::map<std::size_t, P>{{0, x1 + x2}}) == x1 * x1 + Integer(2) * (x1 * x2) + x2 * x2);
    CHECK(substitute(P::one(s) + x1, std::map<std::size_t, P>{{0, P(s)}}) == P::one(s));

    // renaming sigma variables
    const PolySpace sig{std::make_shared<const VarTable>(std::vector<std::string>{"s1", "s2"}, std::vector<int>{1, 2}),
                        unbounded_degree};
    const PolySpace ev{std::make_shared<const VarTable>(std::vector<std::string>{"e1", "e2"}, std::vector<int>{1, 2}),
                       unbounded_degree};
    using IP = Poly<Integer>;
    const IP q2 = IP::variable(sig, 0).pow(2) - Integer(2) * IP::variable(sig, 1);
    const std::vector<IP> images{IP::variable(ev, 0), IP::variable(ev, 1)};
    const IP renamed = substitute(q2, std::span<const IP>(images), ev);
    CHECK(renamed.str() == "e1^2 - 2*e2");

    const std::vector<IP> bad{IP::variable(ev, 0), IP::variable(ev, 0)};
    CHECK_THROWS_AS(substitute(q2, std::span<const IP>(bad), ev), degree_mismatch);
}

TEST_CASE("rendering is graded lexicographic")
{
    const PolySpace s = space_x(2, 2, 10);
    const P x1 = P::variable(s, 0);
    const P x2 = P::variable(s, 1);
    const P p = x2 + x1 + Integer(-3) * (x1 * x2) + x2 * x2 + (x1 * x1).scaled(rat(5, 2)) - P::one(s);
    CHECK(p.str() == "-1 + x1 + x2 + 5/2*x1^2 - 3*x1*x2 + x2^2");
    CHECK(P(s).str() == "0");
    CHECK(p.max_degree() == 4);
    CHECK(P(s).max_degree() == -1);
    CHECK(p.homogeneous_component(2) == x1 + x2);
    CHECK(p.homogeneous_component(2).is_homogeneous(2));
    CHECK_FALSE(p.is_homogeneous(2));
}

TEST_CASE("variable tables reject bad input")
{
    CHECK_THROWS_AS(VarTable({"a", "a"}, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(VarTable({"a"}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(VarTable({"a", "b"}, {1}), std::invalid_argument);
    CHECK(VarTable::uniform("y", 3, 1)->index_of("y2") == std::size_t{1});
    CHECK_FALSE(VarTable::uniform("y", 3, 1)->index_of("x1").has_value());
}

TEST_CASE("ring axioms, truncation ideal and substitution homomorphism on random polynomials")
{
    std::mt19937_64 rng(2024);
    const auto table =
        std::make_shared<const VarTable>(std::vector<std::string>{"x1", "x2", "x3"}, std::vector<int>{1, 2, 3});
    for (int trial = 0; trial < 80; ++trial) {
        const Degree d = static_cast<Degree>(rng() % 11);
        const PolySpace s{table, d};
        const P a = test::random_poly(rng, s);
        const P b = test::random_poly(rng, s);
        const P c = test::random_poly(rng, s);

        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * P::one(s) == a);
        CHECK(a - a == P(s));

        // product of terms above degree d vanishes: multiplying in a wider space then truncating agrees
        const PolySpace wide{table, 3 * d + 9};
        const P aw = a.truncated(wide.trunc);
        const P bw = b.truncated(wide.trunc);
        CHECK((aw * bw).truncated(d) == a * b);
        const P ab = a * b;
        for (const auto &[e, coeff] : ab.terms()) {
            CHECK(table->weighted_degree(e) <= d);
        }

        // degree-preserving substitution commutes with + and *
        std::map<std::size_t, P> assign;
        assign.insert_or_assign(0, test::random_poly(rng, s, 3, 1).homogeneous_component(1));
        assign.insert_or_assign(1, test::random_poly(rng, s, 3, 2).homogeneous_component(2));
        CHECK(substitute(a + b, assign) == substitute(a, assign) + substitute(b, assign));
        CHECK(substitute(a * b, assign) == substitute(a, assign) * substitute(b, assign));
    }
}
