#ifndef CHARCALC_KRING_HPP
#define CHARCALC_KRING_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <charcalc/coeff.hpp>

namespace charcalc
{

class dimension_mismatch : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class not_effective : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Exponent vector a in Z^m of a line class t^a = L1^a1 ... Lm^am.
using LineExponent = std::vector<int>;

// A virtual bundle in the split model of K(B): a finite integer combination
// of Laurent monomials in m base line classes. Direct sum is addition and
// tensor product is multiplication of monomials.
class KElement
{
public:
    using term_map = std::map<LineExponent, Integer>;

    explicit KElement(std::size_t m) : m_m(m) {}

    static KElement zero(std::size_t m) { return KElement(m); }
    static KElement unit(std::size_t m) { return trivial(m, Integer(1)); }
    static KElement trivial(std::size_t m, const Integer &n);
    static KElement line(LineExponent a, const Integer &multiplicity = Integer(1));

    std::size_t m() const { return m_m; }
    const term_map &terms() const { return m_terms; }
    std::size_t size() const { return m_terms.size(); }
    bool is_zero() const { return m_terms.empty(); }

    // All multiplicities nonnegative: a genuine bundle.
    bool is_effective() const;

    Integer multiplicity(const LineExponent &a) const;

    void add_term(const LineExponent &a, const Integer &c);

    KElement operator-() const;
    KElement &operator+=(const KElement &o);
    KElement &operator-=(const KElement &o);
    friend KElement operator+(KElement a, const KElement &b) { return a += b; }
    friend KElement operator-(KElement a, const KElement &b) { return a -= b; }
    friend KElement operator*(const KElement &a, const KElement &b);
    friend KElement operator*(const Integer &n, const KElement &x);
    KElement &operator*=(const KElement &o)
    {
        *this = *this * o;
        return *this;
    }

    KElement pow(unsigned e) const;

    friend bool operator==(const KElement &, const KElement &) = default;

    // Terms by descending total exponent, then descending lexicographic.
    std::vector<std::pair<LineExponent, Integer>> ordered_terms() const;

    // e.g. "L(2) - 1", "2*L(1,0) - L(0,1)"; the trivial line prints as "1".
    std::string str() const;

private:
    void check_dim(const KElement &o) const;

    std::size_t m_m;
    term_map m_terms;
};

// Augmentation: the virtual dimension.
Integer rank(const KElement &x);

// Power series sum_{i <= T} coefficients[i] t^i over K(B), truncated at order T.
class TSeries
{
public:
    TSeries(std::size_t m, int order);

    static TSeries one(std::size_t m, int order);

    std::size_t m() const { return m_m; }
    int order() const { return static_cast<int>(m_coeffs.size()) - 1; }
    const std::vector<KElement> &coefficients() const { return m_coeffs; }
    const KElement &operator[](int i) const { return m_coeffs.at(static_cast<std::size_t>(i)); }
    KElement &operator[](int i) { return m_coeffs.at(static_cast<std::size_t>(i)); }

    TSeries truncated(int order) const;

    // Product truncated at the smaller of the two orders.
    friend TSeries operator*(const TSeries &a, const TSeries &b);

    // Requires an invertible constant term (plus or minus a line class).
    TSeries inverse() const;

    friend bool operator==(const TSeries &, const TSeries &) = default;

    // "1 + (L(1) - 1)*t + ..." with zero coefficients omitted.
    std::string str() const;

private:
    std::size_t m_m;
    std::vector<KElement> m_coeffs;
};

// lambda_t(x) = sum lambda^i(x) t^i up to order T: 1 + L t for a line,
// multiplicative over sums, inverted on negative parts.
TSeries lambda_series(const KElement &x, int order);

// gamma_t(x) = lambda_{t/(1-t)}(x) up to order T.
TSeries gamma_series(const KElement &x, int order);

// gamma^k(x), the coefficient of t^k in gamma_t(x).
KElement gamma_k(const KElement &x, int k);

// f(u) = a_1 u + a_2 u^2 + ...; coefficients[0] holds a_1.
struct OperationSeries {
    std::vector<Integer> coefficients;

    // a_i = binom(k, i): f(u) = (1+u)^k - 1.
    static OperationSeries adams(int k);
};

// sum_{k=1}^{T} a_k Q_k(gamma^1(x), ..., gamma^k(x)).
KElement newton_series_operation(const OperationSeries &f, const KElement &x, int order);

// psi^k through Newton polynomials in the gamma operations, applied to the
// reduced part x - rank(x) and shifted back by rank(x).
KElement adams_newton(const KElement &x, int k);

// psi^k by scaling every exponent vector by k.
KElement adams_split(const KElement &x, int k);

// i-th K-theory Chern class of an effective split bundle:
// e_i(1 - L_1, ..., 1 - L_n).
KElement ktheory_chern(const KElement &bundle, int i);

// Pullback along the map of base tori that sends x_j to sum_l M[j][l] x_l on
// the Chern-root side: t^a goes to t^(M^T a). M has m rows.
KElement pullback_lines(const KElement &x, const std::vector<std::vector<int>> &matrix);

} // namespace charcalc

#endif
