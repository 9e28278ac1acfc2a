#ifndef CHARCALC_COEFF_HPP
#define CHARCALC_COEFF_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace charcalc
{

class division_by_zero : public std::domain_error
{
public:
    division_by_zero() : std::domain_error("division by zero") {}
};

// Arbitrary-precision integer. Used for K-theory multiplicities and the
// integral Newton polynomials.
class Integer
{
public:
    Integer() = default;
    Integer(long v) : m_value(v) {}
    explicit Integer(mpz_class v) : m_value(std::move(v)) {}
    explicit Integer(const std::string &decimal);

    const mpz_class &get() const { return m_value; }

    bool is_zero() const { return sgn(m_value) == 0; }
    int sign() const { return sgn(m_value); }
    bool fits_long() const { return m_value.fits_slong_p(); }
    long to_long() const;

    std::optional<Integer> inverse_if_unit() const;

    std::string str() const { return m_value.get_str(); }

    Integer operator-() const { return Integer(mpz_class(-m_value)); }
    Integer &operator+=(const Integer &o)
    {
        m_value += o.m_value;
        return *this;
    }
    Integer &operator-=(const Integer &o)
    {
        m_value -= o.m_value;
        return *this;
    }
    Integer &operator*=(const Integer &o)
    {
        m_value *= o.m_value;
        return *this;
    }
    friend Integer operator+(Integer a, const Integer &b) { return a += b; }
    friend Integer operator-(Integer a, const Integer &b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer &b) { return a *= b; }

    friend bool operator==(const Integer &a, const Integer &b) { return a.m_value == b.m_value; }
    friend std::strong_ordering operator<=>(const Integer &a, const Integer &b)
    {
        const int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpz_class m_value;
};

// Exact rational number, always stored in lowest terms with a positive
// denominator.
class Rational
{
public:
    Rational() = default;
    Rational(long v) : m_value(v) {}
    Rational(const Integer &v) : m_value(v.get()) {}
    Rational(const Integer &num, const Integer &den);

    Integer numerator() const { return Integer(mpz_class(m_value.get_num())); }
    Integer denominator() const { return Integer(mpz_class(m_value.get_den())); }
    bool is_integer() const { return m_value.get_den() == 1; }

    bool is_zero() const { return sgn(m_value) == 0; }
    int sign() const { return sgn(m_value); }

    std::optional<Rational> inverse_if_unit() const;
    Rational inverse() const;

    // "p/q", or "p" when q = 1.
    std::string str() const;

    Rational operator-() const
    {
        Rational r;
        r.m_value = -m_value;
        return r;
    }
    Rational &operator+=(const Rational &o)
    {
        m_value += o.m_value;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        m_value -= o.m_value;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        m_value *= o.m_value;
        return *this;
    }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.m_value == b.m_value; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class m_value;
};

// The field with two elements.
class F2
{
public:
    F2() = default;
    F2(long v) : m_bit((v % 2) != 0) {}
    F2(const Integer &v) : m_bit(mpz_odd_p(v.get().get_mpz_t()) != 0) {}

    bool bit() const { return m_bit; }
    bool is_zero() const { return !m_bit; }

    std::optional<F2> inverse_if_unit() const
    {
        if (m_bit) {
            return *this;
        }
        return std::nullopt;
    }

    std::string str() const { return m_bit ? "1" : "0"; }

    F2 operator-() const { return *this; }
    F2 &operator+=(const F2 &o)
    {
        m_bit = m_bit != o.m_bit;
        return *this;
    }
    F2 &operator-=(const F2 &o) { return *this += o; }
    F2 &operator*=(const F2 &o)
    {
        m_bit = m_bit && o.m_bit;
        return *this;
    }
    friend F2 operator+(F2 a, const F2 &b) { return a += b; }
    friend F2 operator-(F2 a, const F2 &b) { return a -= b; }
    friend F2 operator*(F2 a, const F2 &b) { return a *= b; }
    friend bool operator==(const F2 &, const F2 &) = default;
    friend auto operator<=>(const F2 &, const F2 &) = default;

private:
    bool m_bit = false;
};

// Commutative coefficient ring with a canonical map from the integers.
template <typename C>
concept Coefficient = std::regular<C> && std::constructible_from<C, const Integer &>
                      && requires(const C &a, const C &b) {
                             { a + b } -> std::same_as<C>;
                             { a - b } -> std::same_as<C>;
                             { a * b } -> std::same_as<C>;
                             { -a } -> std::same_as<C>;
                             { a.is_zero() } -> std::same_as<bool>;
                             { a.inverse_if_unit() } -> std::same_as<std::optional<C>>;
                             { a.str() } -> std::same_as<std::string>;
                         };

// Coefficients that form a field (every nonzero element invertible).
template <typename C>
concept FieldCoefficient = Coefficient<C> && (std::same_as<C, Rational> || std::same_as<C, F2>);

enum class ArithOp { add, sub, mul, div };

// Exact arithmetic; division by zero throws division_by_zero.
Rational rat_arith(const Rational &a, const Rational &b, ArithOp op);

Integer factorial(unsigned k);
Integer binomial(long n, long k);

// 1/k!
Rational factorial_inverse(unsigned k);

Integer pow(const Integer &base, unsigned e);

} // namespace charcalc

#endif
