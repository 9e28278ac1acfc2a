#ifndef CHARCALC_SYMFUN_HPP
#define CHARCALC_SYMFUN_HPP

#include <optional>
#include <span>
#include <vector>

#include <charcalc/coeff.hpp>
#include <charcalc/poly.hpp>

namespace charcalc
{

using IntPoly = Poly<Integer>;

// Integral polynomial in s1..sk, where s_i stands for the i-th elementary
// symmetric function and carries weight i.
using SigmaPoly = Poly<Integer>;

// u1..un, weight 1, no truncation.
PolySpace root_space(int n);

// s1..sk with weights 1..k, no truncation.
PolySpace sigma_space(int k);

// i-th elementary symmetric polynomial in u1..un: 1 for i = 0, 0 for i > n.
IntPoly elementary_symmetric(int i, int n);

// u1^k + ... + un^k.
IntPoly power_sum(int k, int n);

// The power sum Q_k written in the elementary symmetric basis, via
//   Q_k = s1 Q_{k-1} - s2 Q_{k-2} + ... + (-1)^k s_{k-1} Q_1 + (-1)^(k-1) k s_k.
// Results are cached process-wide.
SigmaPoly newton_polynomial(int k);

// Replaces newton_polynomial(k) for the lifetime of the object. Test hook
// for negative controls of the verification suite; not reentrant across
// threads that evaluate Newton polynomials concurrently.
class ScopedNewtonOverride
{
public:
    ScopedNewtonOverride(int k, SigmaPoly replacement);
    ~ScopedNewtonOverride();
    ScopedNewtonOverride(const ScopedNewtonOverride &) = delete;
    ScopedNewtonOverride &operator=(const ScopedNewtonOverride &) = delete;

private:
    int m_k;
    std::optional<SigmaPoly> m_previous;
};

// newton_polynomial(k) with s_i -> values[i-1]; entries past the end of
// `values` count as zero. R is any commutative ring type with +, * and an
// Integer * R scaling.
template <typename R>
R evaluate_newton(int k, std::span<const R> values, const R &zero)
{
    const SigmaPoly q = newton_polynomial(k);
    std::vector<std::vector<R>> powers(values.size());
    auto power = [&](std::size_t i, int e) -> const R & {
        auto &cache = powers[i];
        if (cache.empty()) {
            cache.push_back(values[i]);
        }
        while (static_cast<int>(cache.size()) < e) {
            cache.push_back(cache.back() * values[i]);
        }
        return cache[static_cast<std::size_t>(e - 1)];
    };
    R result = zero;
    for (const auto &[exps, c] : q.terms()) {
        std::optional<R> mono;
        bool vanishes = false;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) {
                continue;
            }
            if (i >= values.size()) {
                vanishes = true;
                break;
            }
            mono = mono ? *mono * power(i, exps[i]) : power(i, exps[i]);
        }
        if (vanishes || !mono) {
            continue;
        }
        result = result + c * *mono;
    }
    return result;
}

template <typename R>
R evaluate_newton(int k, const std::vector<R> &values, const R &zero)
{
    return evaluate_newton(k, std::span<const R>(values), zero);
}

struct PowerSumReport {
    int k;
    int n;
    IntPoly lhs; // Q_k(e_1(u), ..., e_k(u))
    IntPoly rhs; // u1^k + ... + un^k
    bool equal;
};

// Expands both sides of Q_k(e_1, ..., e_k) = u1^k + ... + un^k in n
// variables, with e_i = 0 for i > n.
PowerSumReport verify_power_sum_lemma(int k, int n);

} // namespace charcalc

#endif
