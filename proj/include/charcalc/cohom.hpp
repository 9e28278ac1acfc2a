#ifndef CHARCALC_COHOM_HPP
#define CHARCALC_COHOM_HPP

#include <cstddef>
#include <map>
#include <vector>

#include <charcalc/coeff.hpp>
#include <charcalc/kring.hpp>
#include <charcalc/poly.hpp>

namespace charcalc
{

// Truncated even rational cohomology in Chern-root variables x1..xm.
using CohomElement = Poly<Rational>;

// Mod-2 cohomology in Stiefel-Whitney root variables y1..ym.
using SWElement = Poly<F2>;

// x1..xm of weight 2, truncated at D.
PolySpace cohom_space(std::size_t m, Degree trunc);

// y1..ym of weight 1, truncated at D.
PolySpace sw_space(std::size_t m, Degree trunc);

// <a, x> = a1 x1 + ... + am xm, the first Chern class of t^a.
CohomElement root_form(const LineExponent &a, const PolySpace &space);

// Chern roots of an effective split bundle, repeated by multiplicity.
std::vector<CohomElement> chern_roots(const KElement &bundle, const PolySpace &space);

// i-th elementary symmetric function of an explicit list of roots.
CohomElement chern_class_of_roots(const std::vector<CohomElement> &roots, int i, const PolySpace &space);

// c_i(E) as the i-th elementary symmetric function of the Chern roots.
CohomElement chern_class(const KElement &bundle, int i, const PolySpace &space);

// The projective-bundle ring H(B){1, u, ..., u^(n-1)} of a split bundle of
// rank n >= 1, with defining relation prod (u - root_i) = 0.
class ProjBundleRing
{
public:
    // Coordinates on the basis 1, u, ..., u^(n-1).
    using Element = std::vector<CohomElement>;

    ProjBundleRing(std::vector<CohomElement> roots, PolySpace space);

    static ProjBundleRing of_bundle(const KElement &bundle, const PolySpace &space);

    int rank() const { return static_cast<int>(m_roots.size()); }
    const PolySpace &base_space() const { return m_space; }
    const std::vector<CohomElement> &roots() const { return m_roots; }

    // p_0..p_n with prod (u - root_i) = sum p_j u^j and p_n = 1.
    const std::vector<CohomElement> &relation() const { return m_relation; }

    Element zero() const;
    Element from_base(const CohomElement &c) const;

    // The Euler class u of the tautological line.
    Element euler_class() const;

    Element add(const Element &a, const Element &b) const;
    Element subtract(const Element &a, const Element &b) const;
    Element multiply(const Element &a, const Element &b) const;

    // u^p written in the basis {1, ..., u^(n-1)}.
    Element reduce_power(int p) const;

private:
    // Rewrites a coefficient list of any length into basis coordinates.
    Element reduce(std::vector<CohomElement> coeffs) const;

    PolySpace m_space;
    std::vector<CohomElement> m_roots;
    std::vector<CohomElement> m_relation;
};

ProjBundleRing::Element proj_reduce(const ProjBundleRing &ring, int p);

// c_i(E) read off the monic relation u^n - c_1 u^(n-1) + ... + (-1)^n c_n = 0,
// obtained by expanding prod (u - root_i) in H(B)[u].
CohomElement chern_via_projective(const KElement &bundle, int i, const PolySpace &space);

// S_k(E) = s_k(c_1(E), ..., c_k(E)) for k >= 1.
CohomElement newton_class(const KElement &bundle, int k, const PolySpace &space);

// Sum over Chern roots of root^k.
CohomElement power_sum_of_roots(const KElement &bundle, int k, const PolySpace &space);

// exp(a) truncated at the space's bound; requires a without constant term.
CohomElement exp_truncated(const CohomElement &a);

// Ch(x) = sum_a c_a exp(<a, x>) over the terms of a virtual element.
CohomElement chern_character(const KElement &x, const PolySpace &space);

// rank(E) + sum_{k>=1} S_k(E)/k! for an effective bundle; needs a finite
// truncation.
CohomElement chern_character_via_newton(const KElement &bundle, const PolySpace &space);

// psi^k_H: multiplies the component of degree 2r by k^r.
CohomElement steenrod_adams(int k, const CohomElement &a);

// rank mod 2 + sum_{k>=1} Q_k(w_1(F), ..., w_k(F)) over F2, for an effective
// real split bundle whose line t^b has Stiefel-Whitney root <b, y> mod 2.
SWElement sw_character(const KElement &bundle, const PolySpace &space);

// w_i(F) as the i-th elementary symmetric function of the mod-2 roots.
SWElement stiefel_whitney_class(const KElement &bundle, int i, const PolySpace &space);

// Substitution x_j -> assignment[j]; assigned values must be homogeneous of
// degree 2.
CohomElement pullback(const CohomElement &a, const std::map<std::size_t, CohomElement> &assignment);

} // namespace charcalc

#endif
