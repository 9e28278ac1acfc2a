#include <charcalc/render.hpp>

namespace charcalc
{

nlohmann::json to_json(const Rational &r)
{
    return {{"num", r.numerator().str()}, {"den", r.denominator().str()}};
}

nlohmann::json to_json(const Integer &n)
{
    return {{"num", n.str()}, {"den", "1"}};
}

nlohmann::json to_json(const F2 &v)
{
    return {{"f2", v.bit() ? 1 : 0}};
}

nlohmann::json to_json(const KElement &x)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[a, c] : x.ordered_terms()) {
        terms.push_back({{"exps", a}, {"mult", c.str()}});
    }
    return {{"m", x.m()}, {"terms", std::move(terms)}};
}

nlohmann::json to_json(const TSeries &s)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto &c : s.coefficients()) {
        coeffs.push_back(to_json(c));
    }
    return {{"order", s.order()}, {"coefficients", std::move(coeffs)}};
}

} // namespace charcalc
