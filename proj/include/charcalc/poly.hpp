#ifndef CHARCALC_POLY_HPP
#define CHARCALC_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <charcalc/coeff.hpp>

namespace charcalc
{

using Degree = int;
inline constexpr Degree unbounded_degree = std::numeric_limits<Degree>::max();

using Exponents = std::vector<int>;

class incompatible_spaces : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class degree_mismatch : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class not_invertible : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Ordered variable names with positive integer degree weights.
class VarTable
{
public:
    VarTable(std::vector<std::string> names, std::vector<int> weights);

    // n variables prefix1..prefixn, all of the same weight.
    static std::shared_ptr<const VarTable> uniform(const std::string &prefix, std::size_t n, int weight);

    std::size_t size() const { return m_names.size(); }
    const std::string &name(std::size_t i) const { return m_names[i]; }
    int weight(std::size_t i) const { return m_weights[i]; }
    const std::vector<std::string> &names() const { return m_names; }
    const std::vector<int> &weights() const { return m_weights; }
    std::optional<std::size_t> index_of(const std::string &name) const;

    Degree weighted_degree(const Exponents &e) const
    {
        Degree d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            d += e[i] * m_weights[i];
        }
        return d;
    }

    friend bool operator==(const VarTable &, const VarTable &) = default;

private:
    std::vector<std::string> m_names;
    std::vector<int> m_weights;
};

// A variable table together with a truncation bound: terms of weighted
// degree above `trunc` are identified with zero.
struct PolySpace {
    std::shared_ptr<const VarTable> table;
    Degree trunc = unbounded_degree;

    std::size_t nvars() const { return table->size(); }

    friend bool operator==(const PolySpace &a, const PolySpace &b)
    {
        return a.trunc == b.trunc && (a.table == b.table || *a.table == *b.table);
    }
};

inline bool same_table(const PolySpace &a, const PolySpace &b)
{
    return a.table == b.table || *a.table == *b.table;
}

// Graded lexicographic display order: ascending weighted degree, and
// within one degree the lexicographically larger exponent vector first.
struct GradedLexOrder {
    const VarTable *table;

    bool operator()(const Exponents &a, const Exponents &b) const
    {
        const Degree da = table->weighted_degree(a);
        const Degree db = table->weighted_degree(b);
        if (da != db) {
            return da < db;
        }
        return b < a;
    }
};

template <Coefficient C>
class Poly
{
public:
    using coefficient_type = C;
    using term_map = std::map<Exponents, C>;

    explicit Poly(PolySpace space) : m_space(std::move(space)) {}

    static Poly constant(PolySpace space, const C &c)
    {
        Poly p(std::move(space));
        p.add_term(Exponents(p.nvars(), 0), c);
        return p;
    }

    static Poly one(PolySpace space) { return constant(std::move(space), C(Integer(1))); }

    static Poly variable(PolySpace space, std::size_t i)
    {
        if (i >= space.nvars()) {
            throw std::out_of_range("variable index out of range");
        }
        Poly p(std::move(space));
        Exponents e(p.nvars(), 0);
        e[i] = 1;
        p.add_term(e, C(Integer(1)));
        return p;
    }

    static Poly monomial(PolySpace space, Exponents e, const C &c)
    {
        Poly p(std::move(space));
        p.add_term(e, c);
        return p;
    }

    const PolySpace &space() const { return m_space; }
    const VarTable &table() const { return *m_space.table; }
    Degree trunc() const { return m_space.trunc; }
    std::size_t nvars() const { return m_space.nvars(); }
    const term_map &terms() const { return m_terms; }
    std::size_t size() const { return m_terms.size(); }
    bool is_zero() const { return m_terms.empty(); }

    Degree degree_of(const Exponents &e) const { return table().weighted_degree(e); }

    C coefficient(const Exponents &e) const
    {
        const auto it = m_terms.find(e);
        return it == m_terms.end() ? C{} : it->second;
    }

    C constant_term() const { return coefficient(Exponents(nvars(), 0)); }

    // Largest weighted degree of a stored term, -1 for the zero polynomial.
    Degree max_degree() const
    {
        Degree d = -1;
        for (const auto &[e, c] : m_terms) {
            d = std::max(d, degree_of(e));
        }
        return d;
    }

    Poly homogeneous_component(Degree d) const
    {
        Poly r(m_space);
        for (const auto &[e, c] : m_terms) {
            if (degree_of(e) == d) {
                r.m_terms.emplace(e, c);
            }
        }
        return r;
    }

    bool is_homogeneous(Degree d) const
    {
        return std::all_of(m_terms.begin(), m_terms.end(),
                           [&](const auto &t) { return degree_of(t.first) == d; });
    }

    // Re-truncates at `d`; the result lives in the space with bound `d`.
    Poly truncated(Degree d) const
    {
        Poly r(PolySpace{m_space.table, d});
        for (const auto &[e, c] : m_terms) {
            if (degree_of(e) <= d) {
                r.m_terms.emplace(e, c);
            }
        }
        return r;
    }

    // Adds c*x^e, dropping it if it lies above the truncation bound.
    void add_term(const Exponents &e, const C &c)
    {
        if (e.size() != nvars()) {
            throw std::invalid_argument("exponent vector has wrong length");
        }
        if (c.is_zero() || degree_of(e) > m_space.trunc) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                m_terms.erase(it);
            }
        }
    }

    Poly operator-() const
    {
        Poly r(m_space);
        for (const auto &[e, c] : m_terms) {
            r.m_terms.emplace(e, -c);
        }
        return r;
    }

    Poly &operator+=(const Poly &o)
    {
        check_space(o);
        for (const auto &[e, c] : o.m_terms) {
            add_term(e, c);
        }
        return *this;
    }

    Poly &operator-=(const Poly &o)
    {
        check_space(o);
        for (const auto &[e, c] : o.m_terms) {
            add_term(e, -c);
        }
        return *this;
    }

    Poly &operator*=(const Poly &o)
    {
        *this = *this * o;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }

    friend Poly operator*(const Poly &a, const Poly &b)
    {
        a.check_space(b);
        Poly r(a.m_space);
        Exponents e(a.nvars());
        for (const auto &[ea, ca] : a.m_terms) {
            const Degree da = a.degree_of(ea);
            for (const auto &[eb, cb] : b.m_terms) {
                if (da + a.degree_of(eb) > a.m_space.trunc) {
                    continue;
                }
                for (std::size_t i = 0; i < e.size(); ++i) {
                    e[i] = ea[i] + eb[i];
                }
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    Poly scaled(const C &s) const
    {
        Poly r(m_space);
        if (s.is_zero()) {
            return r;
        }
        for (const auto &[e, c] : m_terms) {
            r.add_term(e, c * s);
        }
        return r;
    }

    friend Poly operator*(const Integer &n, const Poly &p) { return p.scaled(C(n)); }

    Poly pow(unsigned e) const
    {
        Poly r = one(m_space);
        Poly base = *this;
        while (e > 0) {
            if (e & 1U) {
                r *= base;
            }
            e >>= 1U;
            if (e > 0) {
                base *= base;
            }
        }
        return r;
    }

    friend bool operator==(const Poly &a, const Poly &b)
    {
        return a.m_space == b.m_space && a.m_terms == b.m_terms;
    }

    // Terms in graded lexicographic order.
    std::vector<std::pair<Exponents, C>> ordered_terms() const
    {
        std::vector<std::pair<Exponents, C>> out(m_terms.begin(), m_terms.end());
        GradedLexOrder order{m_space.table.get()};
        std::sort(out.begin(), out.end(), [&](const auto &a, const auto &b) { return order(a.first, b.first); });
        return out;
    }

    std::string str() const;

    template <typename F>
    auto map_coefficients(F &&f) const -> Poly<std::decay_t<decltype(f(std::declval<const C &>()))>>
    {
        using D = std::decay_t<decltype(f(std::declval<const C &>()))>;
        Poly<D> r(m_space);
        for (const auto &[e, c] : m_terms) {
            r.add_term(e, f(c));
        }
        return r;
    }

private:
    void check_space(const Poly &o) const
    {
        if (!(m_space == o.m_space)) {
            throw incompatible_spaces("polynomials live in different variable tables or truncations");
        }
    }

    PolySpace m_space;
    term_map m_terms;
};

namespace detail
{

std::string render_monomial(const VarTable &table, const Exponents &e);

template <typename C>
int coefficient_sign(const C &c)
{
    if constexpr (requires { c.sign(); }) {
        return c.sign();
    } else {
        return c.is_zero() ? 0 : 1;
    }
}

} // namespace detail

// e.g. "1 + 3*x1 + 5/2*x1^2"; "0" for the zero polynomial.
template <Coefficient C>
std::string Poly<C>::str() const
{
    if (is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[e, c] : ordered_terms()) {
        const bool negative = detail::coefficient_sign(c) < 0;
        const C magnitude = negative ? -c : c;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const std::string mono = detail::render_monomial(table(), e);
        const bool unit = magnitude == C(Integer(1));
        if (mono.empty()) {
            out += magnitude.str();
        } else if (unit) {
            out += mono;
        } else {
            out += magnitude.str() + "*" + mono;
        }
    }
    return out;
}

// Inverse of a unit up to weighted degree min(order, a.trunc()).
template <Coefficient C>
Poly<C> poly_invert(const Poly<C> &a, Degree order = unbounded_degree)
{
    const auto c0_inv = a.constant_term().inverse_if_unit();
    if (!c0_inv) {
        throw not_invertible("constant term " + a.constant_term().str() + " is not invertible");
    }
    const Degree bound = std::min(order, a.trunc());
    const Poly<C> normalized = a.truncated(bound).scaled(*c0_inv);
    const PolySpace space = normalized.space();
    const Poly<C> one = Poly<C>::one(space);
    if (normalized == one) {
        return one.scaled(*c0_inv);
    }
    if (bound == unbounded_degree) {
        throw not_invertible("inverse of a non-constant polynomial needs a finite truncation order");
    }
    // normalized = 1 - n with n nilpotent modulo the truncation.
    const Poly<C> n = one - normalized;
    Poly<C> result = one;
    Poly<C> power = one;
    while (true) {
        power *= n;
        if (power.is_zero()) {
            break;
        }
        result += power;
    }
    return result.scaled(*c0_inv);
}

// Ring homomorphism sending variable i of `a` to images[i]. Images must all
// live over target.table; the result is truncated at target.trunc.
template <Coefficient C>
Poly<C> substitute(const Poly<C> &a, std::span<const Poly<C>> images, const PolySpace &target)
{
    if (images.size() != a.nvars()) {
        throw std::invalid_argument("substitution needs one image per variable");
    }
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!same_table(images[i].space(), target)) {
            throw incompatible_spaces("substitution image lives over a different variable table");
        }
        const int w = a.table().weight(i);
        for (const auto &[e, c] : images[i].terms()) {
            if (images[i].degree_of(e) % w != 0) {
                throw degree_mismatch("image of " + a.table().name(i) + " has a term of degree "
                                      + std::to_string(images[i].degree_of(e))
                                      + ", not a multiple of its weight " + std::to_string(w));
            }
        }
    }
    std::vector<Poly<C>> lifted;
    lifted.reserve(images.size());
    for (const auto &img : images) {
        lifted.push_back(img.truncated(target.trunc));
    }
    // powers[i][k] = lifted[i]^k, filled on demand
    std::vector<std::vector<Poly<C>>> powers(images.size());
    auto power_of = [&](std::size_t i, int k) -> const Poly<C> & {
        auto &cache = powers[i];
        if (cache.empty()) {
            cache.push_back(Poly<C>::one(target));
        }
        while (static_cast<int>(cache.size()) <= k) {
            cache.push_back(cache.back() * lifted[i]);
        }
        return cache[static_cast<std::size_t>(k)];
    };
    Poly<C> result(target);
    for (const auto &[e, c] : a.terms()) {
        Poly<C> term = Poly<C>::constant(target, c);
        for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i) {
            if (e[i] > 0) {
                term *= power_of(i, e[i]);
            }
        }
        result += term;
    }
    return result;
}

// Same-space substitution; unassigned variables map to themselves.
template <Coefficient C>
Poly<C> substitute(const Poly<C> &a, const std::map<std::size_t, Poly<C>> &assignment)
{
    std::vector<Poly<C>> images;
    images.reserve(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        const auto it = assignment.find(i);
        images.push_back(it == assignment.end() ? Poly<C>::variable(a.space(), i) : it->second);
    }
    return substitute(a, std::span<const Poly<C>>(images), a.space());
}

} // namespace charcalc

#endif
