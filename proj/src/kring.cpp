#include <charcalc/kring.hpp>

#include <algorithm>
#include <numeric>
#include <span>

#include <charcalc/symfun.hpp>

namespace charcalc
{

KElement KElement::trivial(std::size_t m, const Integer &n)
{
    KElement x(m);
    x.add_term(LineExponent(m, 0), n);
    return x;
}

KElement KElement::line(LineExponent a, const Integer &multiplicity)
{
    KElement x(a.size());
    x.add_term(a, multiplicity);
    return x;
}

bool KElement::is_effective() const
{
    return std::all_of(m_terms.begin(), m_terms.end(), [](const auto &t) { return t.second.sign() > 0; });
}

Integer KElement::multiplicity(const LineExponent &a) const
{
    const auto it = m_terms.find(a);
    return it == m_terms.end() ? Integer(0) : it->second;
}

void KElement::add_term(const LineExponent &a, const Integer &c)
{
    if (a.size() != m_m) {
        throw dimension_mismatch("line class L(...) has " + std::to_string(a.size()) + " exponents, expected "
                                 + std::to_string(m_m));
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    }
}

void KElement::check_dim(const KElement &o) const
{
    if (m_m != o.m_m) {
        throw dimension_mismatch("K-theory elements over " + std::to_string(m_m) + " and " + std::to_string(o.m_m)
                                 + " base line classes");
    }
}

KElement KElement::operator-() const
{
    KElement r(m_m);
    for (const auto &[a, c] : m_terms) {
        r.m_terms.emplace(a, -c);
    }
    return r;
}

KElement &KElement::operator+=(const KElement &o)
{
    check_dim(o);
    for (const auto &[a, c] : o.m_terms) {
        add_term(a, c);
    }
    return *this;
}

KElement &KElement::operator-=(const KElement &o)
{
    check_dim(o);
    for (const auto &[a, c] : o.m_terms) {
        add_term(a, -c);
    }
    return *this;
}

KElement operator*(const KElement &a, const KElement &b)
{
    a.check_dim(b);
    KElement r(a.m_m);
    LineExponent e(a.m_m);
    for (const auto &[ea, ca] : a.m_terms) {
        for (const auto &[eb, cb] : b.m_terms) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

KElement operator*(const Integer &n, const KElement &x)
{
    KElement r(x.m_m);
    if (n.is_zero()) {
        return r;
    }
    for (const auto &[a, c] : x.m_terms) {
        r.m_terms.emplace(a, n * c);
    }
    return r;
}

KElement KElement::pow(unsigned e) const
{
    KElement r = unit(m_m);
    for (unsigned i = 0; i < e; ++i) {
        r *= *this;
    }
    return r;
}

std::vector<std::pair<LineExponent, Integer>> KElement::ordered_terms() const
{
    std::vector<std::pair<LineExponent, Integer>> out(m_terms.begin(), m_terms.end());
    std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) {
        const int sx = std::accumulate(x.first.begin(), x.first.end(), 0);
        const int sy = std::accumulate(y.first.begin(), y.first.end(), 0);
        if (sx != sy) {
            return sx > sy;
        }
        return x.first > y.first;
    });
    return out;
}

std::string KElement::str() const
{
    if (is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[a, c] : ordered_terms()) {
        const bool negative = c.sign() < 0;
        const Integer magnitude = negative ? -c : c;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const bool trivial = std::all_of(a.begin(), a.end(), [](int v) { return v == 0; });
        if (trivial) {
            out += magnitude.str();
            continue;
        }
        if (!(magnitude == Integer(1))) {
            out += magnitude.str() + "*";
        }
        out += "L(";
        for (std::size_t i = 0; i < a.size(); ++i) {
            out += (i == 0 ? "" : ",") + std::to_string(a[i]);
        }
        out += ")";
    }
    return out;
}

Integer rank(const KElement &x)
{
    Integer r(0);
    for (const auto &[a, c] : x.terms()) {
        r += c;
    }
    return r;
}

TSeries::TSeries(std::size_t m, int order) : m_m(m)
{
    if (order < 0) {
        throw std::invalid_argument("series order must be >= 0");
    }
    m_coeffs.assign(static_cast<std::size_t>(order) + 1, KElement(m));
}

TSeries TSeries::one(std::size_t m, int order)
{
    TSeries s(m, order);
    s[0] = KElement::unit(m);
    return s;
}

TSeries TSeries::truncated(int order) const
{
    TSeries r(m_m, order);
    for (int i = 0; i <= std::min(order, this->order()); ++i) {
        r[i] = (*this)[i];
    }
    return r;
}

TSeries operator*(const TSeries &a, const TSeries &b)
{
    if (a.m_m != b.m_m) {
        throw dimension_mismatch("series over different numbers of base line classes");
    }
    const int order = std::min(a.order(), b.order());
    TSeries r(a.m_m, order);
    for (int i = 0; i <= order; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= order; ++j) {
            if (!b[j].is_zero()) {
                r[i + j] += a[i] * b[j];
            }
        }
    }
    return r;
}

TSeries TSeries::inverse() const
{
    const KElement &c0 = (*this)[0];
    if (c0.size() != 1 || !c0.terms().begin()->second.inverse_if_unit()) {
        throw std::domain_error("series constant term " + c0.str() + " is not a unit");
    }
    const auto &[a, c] = *c0.terms().begin();
    LineExponent neg(a.size());
    std::transform(a.begin(), a.end(), neg.begin(), [](int v) { return -v; });
    const KElement c0_inv = KElement::line(neg, c); // c = +-1 is its own inverse
    TSeries r(m_m, order());
    r[0] = c0_inv;
    for (int n = 1; n <= order(); ++n) {
        KElement acc(m_m);
        for (int i = 1; i <= n; ++i) {
            if (!(*this)[i].is_zero() && !r[n - i].is_zero()) {
                acc += (*this)[i] * r[n - i];
            }
        }
        r[n] = -(c0_inv * acc);
    }
    return r;
}

std::string TSeries::str() const
{
    std::string out;
    for (int i = 0; i <= order(); ++i) {
        const KElement &c = (*this)[i];
        if (c.is_zero()) {
            continue;
        }
        const std::string power = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
        // single terms carry their sign outside; sums are parenthesized
        const bool negative = c.size() == 1 && c.terms().begin()->second.sign() < 0;
        std::string body = negative ? (-c).str() : c.str();
        if (c.size() > 1 && i > 0) {
            body = "(" + body + ")";
        }
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (i == 0) {
            out += body;
        } else if (body == "1") {
            out += power;
        } else {
            out += body + "*" + power;
        }
    }
    return out.empty() ? "0" : out;
}

namespace
{

// lambda_t of an effective element: product of (1 + L t) over summands.
TSeries lambda_effective(const KElement &x, int order)
{
    TSeries result = TSeries::one(x.m(), order);
    for (const auto &[a, c] : x.terms()) {
        TSeries factor = TSeries::one(x.m(), order);
        if (order >= 1) {
            factor[1] = KElement::line(a);
        }
        for (long i = 0; i < c.to_long(); ++i) {
            result = result * factor;
        }
    }
    return result;
}

} // namespace

TSeries lambda_series(const KElement &x, int order)
{
    if (order < 1) {
        throw std::invalid_argument("lambda_series: order must be >= 1");
    }
    KElement positive(x.m());
    KElement negative(x.m());
    for (const auto &[a, c] : x.terms()) {
        if (c.sign() > 0) {
            positive.add_term(a, c);
        } else {
            negative.add_term(a, -c);
        }
    }
    TSeries result = lambda_effective(positive, order);
    if (!negative.is_zero()) {
        result = result * lambda_effective(negative, order).inverse();
    }
    return result;
}

TSeries gamma_series(const KElement &x, int order)
{
    if (order < 1) {
        throw std::invalid_argument("gamma_series: order must be >= 1");
    }
    const TSeries lambda = lambda_series(x, order);
    TSeries result(x.m(), order);
    result[0] = lambda[0];
    // u^i = t^i (1-t)^{-i} = sum_j binom(i+j-1, j) t^{i+j}
    for (int i = 1; i <= order; ++i) {
        if (lambda[i].is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= order; ++j) {
            result[i + j] += binomial(i + j - 1, j) * lambda[i];
        }
    }
    return result;
}

KElement gamma_k(const KElement &x, int k)
{
    if (k < 0) {
        throw std::invalid_argument("gamma_k: k must be >= 0");
    }
    if (k == 0) {
        return KElement::unit(x.m());
    }
    return gamma_series(x, k)[k];
}

OperationSeries OperationSeries::adams(int k)
{
    OperationSeries f;
    for (int i = 1; i <= k; ++i) {
        f.coefficients.push_back(binomial(k, i));
    }
    return f;
}

KElement newton_series_operation(const OperationSeries &f, const KElement &x, int order)
{
    const int terms = std::min(order, static_cast<int>(f.coefficients.size()));
    KElement result(x.m());
    if (terms < 1) {
        return result;
    }
    const TSeries gamma = gamma_series(x, terms);
    std::vector<KElement> values(gamma.coefficients().begin() + 1, gamma.coefficients().end());
    const KElement zero(x.m());
    for (int k = 1; k <= terms; ++k) {
        const Integer &a = f.coefficients[static_cast<std::size_t>(k - 1)];
        if (a.is_zero()) {
            continue;
        }
        const std::span<const KElement> first_k(values.data(), static_cast<std::size_t>(k));
        result += a * evaluate_newton(k, first_k, zero);
    }
    return result;
}

KElement adams_newton(const KElement &x, int k)
{
    if (k < 1) {
        throw std::invalid_argument("adams_newton: k must be >= 1");
    }
    const KElement trivial_part = KElement::trivial(x.m(), rank(x));
    return newton_series_operation(OperationSeries::adams(k), x - trivial_part, k) + trivial_part;
}

KElement adams_split(const KElement &x, int k)
{
    if (k < 1) {
        throw std::invalid_argument("adams_split: k must be >= 1");
    }
    KElement r(x.m());
    for (const auto &[a, c] : x.terms()) {
        LineExponent scaled(a);
        for (auto &v : scaled) {
            v *= k;
        }
        r.add_term(scaled, c);
    }
    return r;
}

KElement ktheory_chern(const KElement &bundle, int i)
{
    if (!bundle.is_effective()) {
        throw not_effective("K-theory Chern classes need an effective bundle, got " + bundle.str());
    }
    if (i < 0) {
        throw std::invalid_argument("ktheory_chern: i must be >= 0");
    }
    const std::size_t m = bundle.m();
    // e[j] = j-th elementary symmetric function of the roots seen so far
    std::vector<KElement> e(static_cast<std::size_t>(i) + 1, KElement(m));
    e[0] = KElement::unit(m);
    long seen = 0;
    for (const auto &[a, c] : bundle.terms()) {
        const KElement root = KElement::unit(m) - KElement::line(a);
        for (long copy = 0; copy < c.to_long(); ++copy) {
            ++seen;
            for (long j = std::min<long>(seen, i); j >= 1; --j) {
                e[static_cast<std::size_t>(j)] += root * e[static_cast<std::size_t>(j - 1)];
            }
        }
    }
    return e[static_cast<std::size_t>(i)];
}

KElement pullback_lines(const KElement &x, const std::vector<std::vector<int>> &matrix)
{
    if (matrix.size() != x.m()) {
        throw dimension_mismatch("pullback matrix needs one row per base line class");
    }
    const std::size_t target = matrix.empty() ? 0 : matrix.front().size();
    for (const auto &row : matrix) {
        if (row.size() != target) {
            throw dimension_mismatch("pullback matrix rows differ in length");
        }
    }
    KElement r(target);
    for (const auto &[a, c] : x.terms()) {
        LineExponent image(target, 0);
        for (std::size_t j = 0; j < a.size(); ++j) {
            for (std::size_t l = 0; l < target; ++l) {
                image[l] += a[j] * matrix[j][l];
            }
        }
        r.add_term(image, c);
    }
    return r;
}

} // namespace charcalc
