#ifndef CHARCALC_RENDER_HPP
#define CHARCALC_RENDER_HPP

#include <string>

#include <json.hpp>

#include <charcalc/coeff.hpp>
#include <charcalc/kring.hpp>
#include <charcalc/poly.hpp>

namespace charcalc
{

inline constexpr const char *json_schema = "charcalc/1";

// {"num": "p", "den": "q"} with decimal strings.
nlohmann::json to_json(const Rational &r);
nlohmann::json to_json(const Integer &n);
// {"f2": 0 | 1}
nlohmann::json to_json(const F2 &v);

template <Coefficient C>
nlohmann::json to_json(const Poly<C> &p)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &[e, c] : p.ordered_terms()) {
        terms.push_back({{"exps", e}, {"coeff", to_json(c)}});
    }
    nlohmann::json out;
    out["vars"] = p.table().names();
    out["weights"] = p.table().weights();
    out["trunc"] = p.trunc() == unbounded_degree ? nlohmann::json(nullptr) : nlohmann::json(p.trunc());
    out["terms"] = std::move(terms);
    return out;
}

nlohmann::json to_json(const KElement &x);
nlohmann::json to_json(const TSeries &s);

// One line per nonzero homogeneous component: "H^2: 3*x1".
template <Coefficient C>
std::string render_by_degree(const Poly<C> &p)
{
    if (p.is_zero()) {
        return "0\n";
    }
    std::string out;
    const Degree top = p.max_degree();
    for (Degree d = 0; d <= top; ++d) {
        const Poly<C> part = p.homogeneous_component(d);
        if (!part.is_zero()) {
            out += "H^" + std::to_string(d) + ": " + part.str() + "\n";
        }
    }
    return out;
}

} // namespace charcalc

#endif
