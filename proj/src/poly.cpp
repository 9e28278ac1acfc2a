#include <charcalc/poly.hpp>

#include <set>

namespace charcalc
{

VarTable::VarTable(std::vector<std::string> names, std::vector<int> weights)
    : m_names(std::move(names)), m_weights(std::move(weights))
{
    if (m_names.size() != m_weights.size()) {
        throw std::invalid_argument("variable table: names and weights differ in length");
    }
    std::set<std::string> seen;
    for (std::size_t i = 0; i < m_names.size(); ++i) {
        if (!seen.insert(m_names[i]).second) {
            throw std::invalid_argument("variable table: duplicate name '" + m_names[i] + "'");
        }
        if (m_weights[i] < 1) {
            throw std::invalid_argument("variable table: weight of '" + m_names[i] + "' must be >= 1");
        }
    }
}

std::shared_ptr<const VarTable> VarTable::uniform(const std::string &prefix, std::size_t n, int weight)
{
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        names.push_back(prefix + std::to_string(i));
    }
    return std::make_shared<const VarTable>(std::move(names), std::vector<int>(n, weight));
}

std::optional<std::size_t> VarTable::index_of(const std::string &name) const
{
    for (std::size_t i = 0; i < m_names.size(); ++i) {
        if (m_names[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

namespace detail
{

std::string render_monomial(const VarTable &table, const Exponents &e)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "*";
        }
        out += table.name(i);
        if (e[i] > 1) {
            out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

} // namespace detail

} // namespace charcalc
