#include <charcalc/symfun.hpp>

#include <map>
#include <mutex>
#include <shared_mutex>

namespace charcalc
{

namespace
{

struct NewtonCache {
    std::shared_mutex mutex;
    std::vector<SigmaPoly> table; // table[k-1] = Q_k
    std::map<int, SigmaPoly> overrides;
};

NewtonCache &cache()
{
    static NewtonCache c;
    return c;
}

// Q_1..Q_kmax by the Newton identities.
std::vector<SigmaPoly> build_newton_table(int kmax)
{
    std::vector<SigmaPoly> out;
    for (int k = 1; k <= kmax; ++k) {
        const PolySpace space = sigma_space(k);
        auto sigma = [&](int i) { return SigmaPoly::variable(space, static_cast<std::size_t>(i - 1)); };
        SigmaPoly q = Integer((k % 2 == 1) ? k : -k) * sigma(k);
        for (int i = 1; i < k; ++i) {
            // lift Q_{k-i} into the larger table
            std::vector<SigmaPoly> images;
            for (int j = 1; j <= k - i; ++j) {
                images.push_back(sigma(j));
            }
            const SigmaPoly lifted = substitute(out[static_cast<std::size_t>(k - i - 1)],
                                                std::span<const SigmaPoly>(images), space);
            const SigmaPoly contribution = sigma(i) * lifted;
            if (i % 2 == 1) {
                q += contribution;
            } else {
                q -= contribution;
            }
        }
        out.push_back(std::move(q));
    }
    return out;
}

} // namespace

PolySpace root_space(int n)
{
    return PolySpace{VarTable::uniform("u", static_cast<std::size_t>(n), 1), unbounded_degree};
}

PolySpace sigma_space(int k)
{
    std::vector<std::string> names;
    std::vector<int> weights;
    for (int i = 1; i <= k; ++i) {
        names.push_back("s" + std::to_string(i));
        weights.push_back(i);
    }
    return PolySpace{std::make_shared<const VarTable>(std::move(names), std::move(weights)), unbounded_degree};
}

IntPoly elementary_symmetric(int i, int n)
{
    if (i < 0 || n < 0) {
        throw std::invalid_argument("elementary_symmetric: negative index");
    }
    const PolySpace space = root_space(n);
    IntPoly out(space);
    if (i > n) {
        return out;
    }
    // enumerate the i-subsets of {0..n-1} in lexicographic order
    std::vector<int> pick(static_cast<std::size_t>(i));
    for (int j = 0; j < i; ++j) {
        pick[static_cast<std::size_t>(j)] = j;
    }
    while (true) {
        Exponents e(static_cast<std::size_t>(n), 0);
        for (int p : pick) {
            e[static_cast<std::size_t>(p)] = 1;
        }
        out.add_term(e, Integer(1));
        int j = i - 1;
        while (j >= 0 && pick[static_cast<std::size_t>(j)] == n - i + j) {
            --j;
        }
        if (j < 0) {
            break;
        }
        ++pick[static_cast<std::size_t>(j)];
        for (int l = j + 1; l < i; ++l) {
            pick[static_cast<std::size_t>(l)] = pick[static_cast<std::size_t>(l - 1)] + 1;
        }
    }
    return out;
}

IntPoly power_sum(int k, int n)
{
    const PolySpace space = root_space(n);
    IntPoly out(space);
    for (int j = 0; j < n; ++j) {
        Exponents e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(j)] = k;
        out.add_term(e, Integer(1));
    }
    return out;
}

SigmaPoly newton_polynomial(int k)
{
    if (k < 1) {
        throw std::invalid_argument("newton_polynomial: k must be >= 1");
    }
    auto &c = cache();
    {
        std::shared_lock lock(c.mutex);
        if (const auto it = c.overrides.find(k); it != c.overrides.end()) {
            return it->second;
        }
        if (static_cast<int>(c.table.size()) >= k) {
            return c.table[static_cast<std::size_t>(k - 1)];
        }
    }
    std::unique_lock lock(c.mutex);
    if (static_cast<int>(c.table.size()) < k) {
        c.table = build_newton_table(k);
    }
    if (const auto it = c.overrides.find(k); it != c.overrides.end()) {
        return it->second;
    }
    return c.table[static_cast<std::size_t>(k - 1)];
}

ScopedNewtonOverride::ScopedNewtonOverride(int k, SigmaPoly replacement) : m_k(k)
{
    auto &c = cache();
    std::unique_lock lock(c.mutex);
    if (const auto it = c.overrides.find(k); it != c.overrides.end()) {
        m_previous = it->second;
    }
    c.overrides.insert_or_assign(k, std::move(replacement));
}

ScopedNewtonOverride::~ScopedNewtonOverride()
{
    auto &c = cache();
    std::unique_lock lock(c.mutex);
    if (m_previous) {
        c.overrides.insert_or_assign(m_k, std::move(*m_previous));
    } else {
        c.overrides.erase(m_k);
    }
}

PowerSumReport verify_power_sum_lemma(int k, int n)
{
    const PolySpace target = root_space(n);
    std::vector<IntPoly> images;
    for (int i = 1; i <= k; ++i) {
        images.push_back(elementary_symmetric(i, n));
    }
    IntPoly lhs = substitute(newton_polynomial(k), std::span<const IntPoly>(images), target);
    IntPoly rhs = power_sum(k, n);
    const bool equal = lhs == rhs;
    return PowerSumReport{k, n, std::move(lhs), std::move(rhs), equal};
}

} // namespace charcalc
