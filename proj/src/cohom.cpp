#include <charcalc/cohom.hpp>

#include <span>
#include <string>

#include <charcalc/symfun.hpp>

namespace charcalc
{

namespace
{

void require_effective(const KElement &bundle, const char *what)
{
    if (!bundle.is_effective()) {
        throw not_effective(std::string(what) + " needs an effective bundle, got " + bundle.str());
    }
}

void require_dimension(const KElement &bundle, const PolySpace &space)
{
    if (bundle.m() != space.nvars()) {
        throw dimension_mismatch("bundle over " + std::to_string(bundle.m()) + " line classes, cohomology over "
                                 + std::to_string(space.nvars()) + " variables");
    }
}

// e_0..e_max of the given roots, by multiplying out prod (1 + r t).
template <typename C>
std::vector<Poly<C>> elementary_of_roots(const std::vector<Poly<C>> &roots, int max, const PolySpace &space)
{
    std::vector<Poly<C>> e(static_cast<std::size_t>(max) + 1, Poly<C>(space));
    e[0] = Poly<C>::one(space);
    int seen = 0;
    for (const auto &r : roots) {
        ++seen;
        for (int j = std::min(seen, max); j >= 1; --j) {
            e[static_cast<std::size_t>(j)] += r * e[static_cast<std::size_t>(j - 1)];
        }
    }
    return e;
}

// Coefficients p_0..p_n of prod (u - root_i), expanded in H(B)[u] with u an
// honest polynomial variable of weight 2.
std::vector<CohomElement> expand_monic_relation(const std::vector<CohomElement> &roots, const PolySpace &space)
{
    const std::size_t m = space.nvars();
    const int n = static_cast<int>(roots.size());
    std::vector<std::string> names = space.table->names();
    std::vector<int> weights = space.table->weights();
    names.push_back("u");
    weights.push_back(2);
    const Degree trunc = space.trunc == unbounded_degree ? unbounded_degree : space.trunc + 2 * n;
    const PolySpace ext{std::make_shared<const VarTable>(std::move(names), std::move(weights)), trunc};

    std::vector<CohomElement> inclusion;
    for (std::size_t j = 0; j < m; ++j) {
        inclusion.push_back(CohomElement::variable(ext, j));
    }
    const CohomElement u = CohomElement::variable(ext, m);
    CohomElement product = CohomElement::one(ext);
    for (const auto &r : roots) {
        product *= u - substitute(r, std::span<const CohomElement>(inclusion), ext);
    }

    std::vector<CohomElement> coeffs(static_cast<std::size_t>(n) + 1, CohomElement(space));
    for (const auto &[e, c] : product.terms()) {
        const int upow = e[m];
        if (upow > n) {
            throw std::logic_error("monic relation has a term above degree n in u");
        }
        Exponents base(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(m));
        coeffs[static_cast<std::size_t>(upow)].add_term(base, c);
    }
    return coeffs;
}

} // namespace

PolySpace cohom_space(std::size_t m, Degree trunc)
{
    return PolySpace{VarTable::uniform("x", m, 2), trunc};
}

PolySpace sw_space(std::size_t m, Degree trunc)
{
    return PolySpace{VarTable::uniform("y", m, 1), trunc};
}

CohomElement root_form(const LineExponent &a, const PolySpace &space)
{
    if (a.size() != space.nvars()) {
        throw dimension_mismatch("exponent vector length does not match the number of root variables");
    }
    CohomElement r(space);
    for (std::size_t j = 0; j < a.size(); ++j) {
        Exponents e(a.size(), 0);
        e[j] = 1;
        r.add_term(e, Rational(a[j]));
    }
    return r;
}

std::vector<CohomElement> chern_roots(const KElement &bundle, const PolySpace &space)
{
    require_effective(bundle, "Chern roots");
    require_dimension(bundle, space);
    std::vector<CohomElement> roots;
    for (const auto &[a, c] : bundle.terms()) {
        const CohomElement r = root_form(a, space);
        for (long i = 0; i < c.to_long(); ++i) {
            roots.push_back(r);
        }
    }
    return roots;
}

CohomElement chern_class_of_roots(const std::vector<CohomElement> &roots, int i, const PolySpace &space)
{
    if (i < 0) {
        throw std::invalid_argument("chern_class: i must be >= 0");
    }
    if (i > static_cast<int>(roots.size())) {
        return CohomElement(space);
    }
    return elementary_of_roots(roots, i, space)[static_cast<std::size_t>(i)];
}

CohomElement chern_class(const KElement &bundle, int i, const PolySpace &space)
{
    return chern_class_of_roots(chern_roots(bundle, space), i, space);
}

ProjBundleRing::ProjBundleRing(std::vector<CohomElement> roots, PolySpace space)
    : m_space(std::move(space)), m_roots(std::move(roots))
{
    if (m_roots.empty()) {
        throw std::invalid_argument("projective bundle of a rank-0 bundle is empty");
    }
    for (const auto &r : m_roots) {
        if (!(r.space() == m_space) || !r.is_homogeneous(2)) {
            throw degree_mismatch("projective bundle roots must be degree-2 classes of the base");
        }
    }
    m_relation = expand_monic_relation(m_roots, m_space);
}

ProjBundleRing ProjBundleRing::of_bundle(const KElement &bundle, const PolySpace &space)
{
    return ProjBundleRing(chern_roots(bundle, space), space);
}

ProjBundleRing::Element ProjBundleRing::zero() const
{
    return Element(static_cast<std::size_t>(rank()), CohomElement(m_space));
}

ProjBundleRing::Element ProjBundleRing::from_base(const CohomElement &c) const
{
    Element r = zero();
    r[0] = c;
    return r;
}

ProjBundleRing::Element ProjBundleRing::euler_class() const
{
    return reduce_power(1);
}

ProjBundleRing::Element ProjBundleRing::add(const Element &a, const Element &b) const
{
    Element r = zero();
    for (std::size_t j = 0; j < r.size(); ++j) {
        r[j] = a.at(j) + b.at(j);
    }
    return r;
}

ProjBundleRing::Element ProjBundleRing::subtract(const Element &a, const Element &b) const
{
    Element r = zero();
    for (std::size_t j = 0; j < r.size(); ++j) {
        r[j] = a.at(j) - b.at(j);
    }
    return r;
}

ProjBundleRing::Element ProjBundleRing::multiply(const Element &a, const Element &b) const
{
    const std::size_t n = static_cast<std::size_t>(rank());
    std::vector<CohomElement> product(2 * n - 1, CohomElement(m_space));
    for (std::size_t i = 0; i < n; ++i) {
        if (a.at(i).is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            product[i + j] += a[i] * b.at(j);
        }
    }
    return reduce(std::move(product));
}

ProjBundleRing::Element ProjBundleRing::reduce(std::vector<CohomElement> coeffs) const
{
    const std::size_t n = static_cast<std::size_t>(rank());
    // u^n = -(p_0 + p_1 u + ... + p_{n-1} u^{n-1}); eliminate from the top
    for (std::size_t d = coeffs.size(); d-- > n;) {
        const CohomElement lead = coeffs[d];
        if (lead.is_zero()) {
            continue;
        }
        coeffs[d] = CohomElement(m_space);
        for (std::size_t j = 0; j < n; ++j) {
            coeffs[d - n + j] -= lead * m_relation[j];
        }
    }
    coeffs.resize(n, CohomElement(m_space));
    return coeffs;
}

ProjBundleRing::Element ProjBundleRing::reduce_power(int p) const
{
    if (p < 0) {
        throw std::invalid_argument("reduce_power: exponent must be >= 0");
    }
    std::vector<CohomElement> coeffs(static_cast<std::size_t>(std::max(p + 1, rank())), CohomElement(m_space));
    coeffs[static_cast<std::size_t>(p)] = CohomElement::one(m_space);
    return reduce(std::move(coeffs));
}

ProjBundleRing::Element proj_reduce(const ProjBundleRing &ring, int p)
{
    return ring.reduce_power(p);
}

CohomElement chern_via_projective(const KElement &bundle, int i, const PolySpace &space)
{
    if (i < 0) {
        throw std::invalid_argument("chern_via_projective: i must be >= 0");
    }
    const auto roots = chern_roots(bundle, space);
    const int n = static_cast<int>(roots.size());
    if (n == 0) {
        return i == 0 ? CohomElement::one(space) : CohomElement(space);
    }
    if (i > n) {
        return CohomElement(space);
    }
    const ProjBundleRing ring(roots, space);
    const CohomElement &coeff = ring.relation()[static_cast<std::size_t>(n - i)];
    return i % 2 == 0 ? coeff : -coeff;
}

CohomElement newton_class(const KElement &bundle, int k, const PolySpace &space)
{
    if (k < 1) {
        throw std::invalid_argument("newton_class: k must be >= 1");
    }
    const auto roots = chern_roots(bundle, space);
    const int n = std::min(k, static_cast<int>(roots.size()));
    auto e = elementary_of_roots(roots, n, space);
    const std::vector<CohomElement> classes(e.begin() + 1, e.end());
    return evaluate_newton(k, std::span<const CohomElement>(classes), CohomElement(space));
}

CohomElement power_sum_of_roots(const KElement &bundle, int k, const PolySpace &space)
{
    CohomElement sum(space);
    for (const auto &r : chern_roots(bundle, space)) {
        sum += r.pow(static_cast<unsigned>(k));
    }
    return sum;
}

CohomElement exp_truncated(const CohomElement &a)
{
    if (!a.constant_term().is_zero()) {
        throw std::invalid_argument("exp_truncated: argument must have zero constant term");
    }
    const PolySpace &space = a.space();
    CohomElement result = CohomElement::one(space);
    if (a.is_zero()) {
        return result;
    }
    if (space.trunc == unbounded_degree) {
        throw std::invalid_argument("exp_truncated: needs a finite truncation");
    }
    CohomElement power = CohomElement::one(space);
    for (unsigned j = 1;; ++j) {
        power *= a;
        if (power.is_zero()) {
            break;
        }
        result += power.scaled(factorial_inverse(j));
    }
    return result;
}

CohomElement chern_character(const KElement &x, const PolySpace &space)
{
    require_dimension(x, space);
    CohomElement ch(space);
    for (const auto &[a, c] : x.terms()) {
        ch += exp_truncated(root_form(a, space)).scaled(Rational(c));
    }
    return ch;
}

CohomElement chern_character_via_newton(const KElement &bundle, const PolySpace &space)
{
    require_effective(bundle, "Chern character via Newton classes");
    if (space.trunc == unbounded_degree) {
        throw std::invalid_argument("chern_character_via_newton: needs a finite truncation");
    }
    CohomElement ch = CohomElement::constant(space, Rational(rank(bundle)));
    for (int k = 1; 2 * k <= space.trunc; ++k) {
        ch += newton_class(bundle, k, space).scaled(factorial_inverse(static_cast<unsigned>(k)));
    }
    return ch;
}

CohomElement steenrod_adams(int k, const CohomElement &a)
{
    if (k < 1) {
        throw std::invalid_argument("steenrod_adams: k must be >= 1");
    }
    CohomElement r(a.space());
    for (const auto &[e, c] : a.terms()) {
        const Degree d = a.degree_of(e);
        if (d % 2 != 0) {
            throw degree_mismatch("steenrod_adams is defined on even-degree classes only");
        }
        r.add_term(e, c * Rational(pow(Integer(k), static_cast<unsigned>(d / 2))));
    }
    return r;
}

SWElement stiefel_whitney_class(const KElement &bundle, int i, const PolySpace &space)
{
    require_effective(bundle, "Stiefel-Whitney classes");
    require_dimension(bundle, space);
    std::vector<SWElement> roots;
    for (const auto &[b, c] : bundle.terms()) {
        SWElement r(space);
        for (std::size_t j = 0; j < b.size(); ++j) {
            Exponents e(b.size(), 0);
            e[j] = 1;
            r.add_term(e, F2(b[j]));
        }
        for (long copy = 0; copy < c.to_long(); ++copy) {
            roots.push_back(r);
        }
    }
    if (i > static_cast<int>(roots.size())) {
        return SWElement(space);
    }
    return elementary_of_roots(roots, i, space)[static_cast<std::size_t>(i)];
}

SWElement sw_character(const KElement &bundle, const PolySpace &space)
{
    require_effective(bundle, "Stiefel-Whitney character");
    require_dimension(bundle, space);
    if (space.trunc == unbounded_degree) {
        throw std::invalid_argument("sw_character: needs a finite truncation");
    }
    const int n = static_cast<int>(rank(bundle).to_long());
    std::vector<SWElement> w;
    for (int i = 1; i <= std::min(n, space.trunc); ++i) {
        w.push_back(stiefel_whitney_class(bundle, i, space));
    }
    SWElement ch = SWElement::constant(space, F2(n));
    for (int k = 1; k <= space.trunc; ++k) {
        ch += evaluate_newton(k, std::span<const SWElement>(w), SWElement(space));
    }
    return ch;
}

CohomElement pullback(const CohomElement &a, const std::map<std::size_t, CohomElement> &assignment)
{
    for (const auto &[var, value] : assignment) {
        if (var >= a.nvars()) {
            throw std::out_of_range("pullback assigns an unknown variable");
        }
        if (!value.is_homogeneous(2)) {
            throw degree_mismatch("pullback must send " + a.table().name(var) + " to a homogeneous degree-2 class");
        }
    }
    return substitute(a, assignment);
}

} // namespace charcalc
