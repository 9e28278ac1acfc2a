#ifndef CHARCALC_VERIFY_HPP
#define CHARCALC_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <charcalc/kring.hpp>
#include <charcalc/poly.hpp>

namespace charcalc
{

// Identity checks on concrete inputs. Each returns a failure description,
// or nothing when the identity holds exactly.
namespace checks
{

using Outcome = std::optional<std::string>;

Outcome newton_table();
Outcome power_sum_lemma(int k, int n);
// Evaluating over F2 agrees with reducing the integral evaluation mod 2.
Outcome newton_mod2_reduction(int k, const std::vector<Poly<Integer>> &values);
Outcome gamma_reduced_line(const LineExponent &a, int order);
Outcome lambda_multiplicative(const KElement &x, const KElement &y, int order);
Outcome gamma_multiplicative(const KElement &x, const KElement &y, int order);
Outcome newton_series_additive(const std::vector<Integer> &series, const KElement &x, const KElement &y);
Outcome adams_dual_route(const KElement &x, int k);
Outcome adams_ring_laws(const KElement &x, const KElement &y, int k);
Outcome rank_laws(const KElement &x, const KElement &y);
Outcome gamma_one(const KElement &x);
Outcome ktheory_whitney(const KElement &e, const KElement &f);
Outcome chern_whitney(const KElement &e, const KElement &f, const PolySpace &space);
Outcome chern_permutation(const KElement &e, const std::vector<std::size_t> &order, const PolySpace &space);
Outcome chern_dual_route(const KElement &e, const PolySpace &space);
Outcome projective_relation(const KElement &e, const PolySpace &space);
Outcome newton_class_additive(const KElement &e, const KElement &f, int k, const PolySpace &space);
Outcome newton_class_power_sum(const KElement &e, int k, const PolySpace &space);
Outcome newton_class_tensor(const KElement &e, const KElement &f, int k, const PolySpace &space);
Outcome ch_additive(const KElement &x, const KElement &y, const PolySpace &space);
Outcome ch_multiplicative(const KElement &x, const KElement &y, const PolySpace &space);
Outcome ch_unit_and_rank(const KElement &x, const PolySpace &space);
Outcome ch_routes(const KElement &e, const PolySpace &space);
// Ch(psi^k x) = psi^k_H Ch(x), with psi^k by both routes.
Outcome diagram(const KElement &x, int k, const PolySpace &space);
Outcome steenrod_laws(const KElement &x, const KElement &y, int k, int l, const PolySpace &space);
Outcome sw_additive(const KElement &f, const KElement &g, const PolySpace &space);
Outcome pullback_naturality(const KElement &e, const std::vector<std::vector<int>> &matrix, const PolySpace &space);

} // namespace checks

struct IdentityResult {
    std::string name;
    int passed = 0;
    int failed = 0;
    std::string first_failure;
};

struct VerifyReport {
    std::vector<IdentityResult> identities;

    bool all_passed() const;
    // One "PASS|FAIL name passed/total" line per identity, then a summary.
    std::string str() const;
};

struct VerifyOptions {
    std::uint64_t seed = 0;
    int trials = 50;
    Degree trunc = 10;
    int order = 8;
};

// Runs every identity on bundles drawn deterministically from the seed.
VerifyReport verify_suite(const VerifyOptions &options);

} // namespace charcalc

#endif
