#include <charcalc/coeff.hpp>

#include <utility>

namespace charcalc
{

Integer::Integer(const std::string &decimal)
{
    if (m_value.set_str(decimal, 10) != 0) {
        throw std::invalid_argument("not a decimal integer: '" + decimal + "'");
    }
}

long Integer::to_long() const
{
    if (!fits_long()) {
        throw std::overflow_error("integer does not fit in a long: " + str());
    }
    return m_value.get_si();
}

std::optional<Integer> Integer::inverse_if_unit() const
{
    if (m_value == 1 || m_value == -1) {
        return *this;
    }
    return std::nullopt;
}

Rational::Rational(const Integer &num, const Integer &den)
{
    if (den.is_zero()) {
        throw division_by_zero();
    }
    m_value = mpq_class(num.get(), den.get());
    m_value.canonicalize();
}

std::optional<Rational> Rational::inverse_if_unit() const
{
    if (is_zero()) {
        return std::nullopt;
    }
    return inverse();
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw division_by_zero();
    }
    Rational r;
    r.m_value = 1 / m_value;
    return r;
}

std::string Rational::str() const
{
    if (is_integer()) {
        return m_value.get_num().get_str();
    }
    return m_value.get_num().get_str() + "/" + m_value.get_den().get_str();
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw division_by_zero();
    }
    m_value /= o.m_value;
    return *this;
}

Rational rat_arith(const Rational &a, const Rational &b, ArithOp op)
{
    switch (op) {
        case ArithOp::add:
            return a + b;
        case ArithOp::sub:
            return a - b;
        case ArithOp::mul:
            return a * b;
        case ArithOp::div:
            return a / b;
    }
    throw std::invalid_argument("unknown arithmetic operation");
}

Integer factorial(unsigned k)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return Integer(std::move(r));
}

Integer binomial(long n, long k)
{
    if (k < 0) {
        return Integer(0);
    }
    mpz_class r;
    if (n >= 0) {
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    } else {
        mpz_class nn(n);
        mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
    }
    return Integer(std::move(r));
}

Rational factorial_inverse(unsigned k)
{
    return Rational(Integer(1), factorial(k));
}

Integer pow(const Integer &base, unsigned e)
{
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get().get_mpz_t(), e);
    return Integer(std::move(r));
}

} // namespace charcalc
