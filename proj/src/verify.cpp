#include <charcalc/verify.hpp>

#include <map>
#include <numeric>
#include <span>
#include <utility>

#include <charcalc/cohom.hpp>
#include <charcalc/random.hpp>
#include <charcalc/symfun.hpp>

namespace charcalc
{

namespace checks
{

namespace
{

std::string describe(const KElement &x) { return x.str(); }
std::string describe(const TSeries &s) { return s.str(); }
template <Coefficient C>
std::string describe(const Poly<C> &p)
{
    return p.str();
}

template <typename T>
Outcome expect_equal(const T &lhs, const T &rhs, const std::string &what)
{
    if (lhs == rhs) {
        return std::nullopt;
    }
    return what + ": " + describe(lhs) + " != " + describe(rhs);
}

// First failure of a sequence of outcomes.
Outcome first_of(std::initializer_list<Outcome> outcomes)
{
    for (const auto &o : outcomes) {
        if (o) {
            return o;
        }
    }
    return std::nullopt;
}

int rank_of(const KElement &e) { return static_cast<int>(rank(e).to_long()); }

} // namespace

Outcome newton_table()
{
    const auto expect = [](int k, std::vector<std::pair<Exponents, long>> terms) -> Outcome {
        SigmaPoly want(sigma_space(k));
        for (const auto &[e, c] : terms) {
            want.add_term(e, Integer(c));
        }
        return expect_equal(newton_polynomial(k), want, "s_" + std::to_string(k));
    };
    return first_of({
        expect(1, {{{1}, 1}}),
        expect(2, {{{2, 0}, 1}, {{0, 1}, -2}}),
        expect(3, {{{3, 0, 0}, 1}, {{1, 1, 0}, -3}, {{0, 0, 1}, 3}}),
    });
}

Outcome power_sum_lemma(int k, int n)
{
    const PowerSumReport r = verify_power_sum_lemma(k, n);
    if (r.equal) {
        return std::nullopt;
    }
    return "Q_" + std::to_string(k) + " in " + std::to_string(n) + " variables: " + r.lhs.str() + " != " + r.rhs.str();
}

Outcome newton_mod2_reduction(int k, const std::vector<Poly<Integer>> &values)
{
    if (values.empty()) {
        return std::nullopt;
    }
    const PolySpace &space = values.front().space();
    const auto to_f2 = [](const Integer &c) { return F2(c); };
    const Poly<Integer> integral = evaluate_newton(k, std::span<const Poly<Integer>>(values), Poly<Integer>(space));
    std::vector<Poly<F2>> reduced;
    for (const auto &v : values) {
        reduced.push_back(v.map_coefficients(to_f2));
    }
    const Poly<F2> mod2 = evaluate_newton(k, std::span<const Poly<F2>>(reduced), Poly<F2>(space));
    return expect_equal(mod2, integral.map_coefficients(to_f2), "Q_" + std::to_string(k) + " mod 2");
}

Outcome gamma_reduced_line(const LineExponent &a, int order)
{
    const std::size_t m = a.size();
    const KElement reduced = KElement::line(a) - KElement::unit(m);
    TSeries want = TSeries::one(m, order);
    want[1] = reduced;
    return expect_equal(gamma_series(reduced, order), want, "gamma_t(" + reduced.str() + ")");
}

Outcome lambda_multiplicative(const KElement &x, const KElement &y, int order)
{
    return expect_equal(lambda_series(x + y, order), lambda_series(x, order) * lambda_series(y, order),
                        "lambda_t(x+y) vs lambda_t(x) lambda_t(y) for x=" + x.str() + ", y=" + y.str());
}

Outcome gamma_multiplicative(const KElement &x, const KElement &y, int order)
{
    return expect_equal(gamma_series(x + y, order), gamma_series(x, order) * gamma_series(y, order),
                        "gamma_t(x+y) vs gamma_t(x) gamma_t(y) for x=" + x.str() + ", y=" + y.str());
}

Outcome newton_series_additive(const std::vector<Integer> &series, const KElement &x, const KElement &y)
{
    const OperationSeries f{series};
    const int order = static_cast<int>(series.size());
    return expect_equal(newton_series_operation(f, x + y, order),
                        newton_series_operation(f, x, order) + newton_series_operation(f, y, order),
                        "c(x+y) vs c(x)+c(y) for x=" + x.str() + ", y=" + y.str());
}

Outcome adams_dual_route(const KElement &x, int k)
{
    const KElement split = adams_split(x, k);
    const std::string tag = "psi^" + std::to_string(k) + "(" + x.str() + ")";
    return first_of({
        expect_equal(adams_newton(x, k), split, tag + " newton vs split"),
        // the unreduced Newton series already carries psi^k(1) = 1
        expect_equal(newton_series_operation(OperationSeries::adams(k), x, k), split, tag + " unreduced series"),
    });
}

Outcome adams_ring_laws(const KElement &x, const KElement &y, int k)
{
    const std::size_t m = x.m();
    const std::string tag = " (k=" + std::to_string(k) + ", x=" + x.str() + ", y=" + y.str() + ")";
    return first_of({
        expect_equal(adams_split(x * y, k), adams_split(x, k) * adams_split(y, k), "psi(xy)" + tag),
        expect_equal(adams_split(KElement::unit(m), k), KElement::unit(m), "psi(1)" + tag),
        expect_equal(adams_newton(KElement::unit(m), k), KElement::unit(m), "newton psi(1)" + tag),
        expect_equal(adams_split(x + y, k), adams_split(x, k) + adams_split(y, k), "psi(x+y)" + tag),
        expect_equal(adams_newton(x + y, k), adams_newton(x, k) + adams_newton(y, k), "newton psi(x+y)" + tag),
        rank(adams_split(x, k)) == rank(x) ? Outcome{} : Outcome{"rank(psi x) != rank x" + tag},
    });
}

Outcome rank_laws(const KElement &x, const KElement &y)
{
    const std::string tag = " (x=" + x.str() + ", y=" + y.str() + ")";
    if (!(rank(x * y) == rank(x) * rank(y))) {
        return "rank(xy) != rank(x) rank(y)" + tag;
    }
    if (!(rank(x + y) == rank(x) + rank(y))) {
        return "rank(x+y) != rank(x) + rank(y)" + tag;
    }
    if (!(rank(KElement::unit(x.m())) == Integer(1))) {
        return std::string("rank(1) != 1");
    }
    return std::nullopt;
}

Outcome gamma_one(const KElement &x)
{
    const KElement reduced = x - KElement::trivial(x.m(), rank(x));
    return first_of({
        expect_equal(gamma_k(x, 1), x, "gamma^1(x)"),
        expect_equal(gamma_k(reduced, 1), reduced, "gamma^1(x - rank x)"),
        expect_equal(gamma_k(x, 0), KElement::unit(x.m()), "gamma^0(x)"),
    });
}

Outcome ktheory_whitney(const KElement &e, const KElement &f)
{
    const int n = rank_of(e) + rank_of(f);
    const KElement sum = e + f;
    for (int k = 0; k <= n + 1; ++k) {
        KElement conv(e.m());
        for (int i = 0; i <= k; ++i) {
            conv += ktheory_chern(e, i) * ktheory_chern(f, k - i);
        }
        if (auto o = expect_equal(ktheory_chern(sum, k), conv,
                                  "K-theory c_" + std::to_string(k) + "(" + e.str() + " + " + f.str() + ")")) {
            return o;
        }
    }
    return std::nullopt;
}

Outcome chern_whitney(const KElement &e, const KElement &f, const PolySpace &space)
{
    const int n = rank_of(e) + rank_of(f);
    const KElement sum = e + f;
    for (int k = 0; k <= n + 1; ++k) {
        CohomElement conv(space);
        for (int i = 0; i <= k; ++i) {
            conv += chern_class(e, i, space) * chern_class(f, k - i, space);
        }
        if (auto o = expect_equal(chern_class(sum, k, space), conv,
                                  "c_" + std::to_string(k) + "(" + e.str() + " + " + f.str() + ")")) {
            return o;
        }
    }
    return std::nullopt;
}

Outcome chern_permutation(const KElement &e, const std::vector<std::size_t> &order, const PolySpace &space)
{
    const auto roots = chern_roots(e, space);
    if (order.size() != roots.size()) {
        return std::string("permutation has the wrong length");
    }
    std::vector<CohomElement> permuted;
    for (std::size_t i : order) {
        permuted.push_back(roots.at(i));
    }
    for (int i = 0; i <= static_cast<int>(roots.size()); ++i) {
        if (auto o = expect_equal(chern_class_of_roots(permuted, i, space), chern_class_of_roots(roots, i, space),
                                  "permuted c_" + std::to_string(i) + "(" + e.str() + ")")) {
            return o;
        }
    }
    return std::nullopt;
}

Outcome chern_dual_route(const KElement &e, const PolySpace &space)
{
    for (int i = 0; i <= rank_of(e) + 1; ++i) {
        if (auto o = expect_equal(chern_via_projective(e, i, space), chern_class(e, i, space),
                                  "projective vs root c_" + std::to_string(i) + "(" + e.str() + ")")) {
            return o;
        }
    }
    return std::nullopt;
}

Outcome projective_relation(const KElement &e, const PolySpace &space)
{
    if (rank_of(e) == 0) {
        return std::nullopt;
    }
    const ProjBundleRing ring = ProjBundleRing::of_bundle(e, space);
    const int n = ring.rank();
    const auto u = ring.euler_class();
    auto product = ring.from_base(CohomElement::one(space));
    for (const auto &r : ring.roots()) {
        product = ring.multiply(product, ring.subtract(u, ring.from_base(r)));
    }
    if (product != ring.zero()) {
        return "prod (u - root) is not zero in H(P(E)) for E = " + e.str();
    }
    for (int j = 0; j <= n; ++j) {
        if (ring.reduce_power(n + j) != ring.multiply(ring.reduce_power(n), ring.reduce_power(j))) {
            return "u^(n+" + std::to_string(j) + ") != u^n u^" + std::to_string(j) + " for E = " + e.str();
        }
    }
    return std::nullopt;
}

Outcome newton_class_additive(const KElement &e, const KElement &f, int k, const PolySpace &space)
{
    return expect_equal(newton_class(e + f, k, space), newton_class(e, k, space) + newton_class(f, k, space),
                        "S_" + std::to_string(k) + "(" + e.str() + " + " + f.str() + ")");
}

Outcome newton_class_power_sum(const KElement &e, int k, const PolySpace &space)
{
    return expect_equal(newton_class(e, k, space), power_sum_of_roots(e, k, space),
                        "S_" + std::to_string(k) + "(" + e.str() + ") vs root power sum");
}

Outcome newton_class_tensor(const KElement &e, const KElement &f, int k, const PolySpace &space)
{
    const auto s = [&](const KElement &b, int i) {
        return i == 0 ? CohomElement::constant(space, Rational(rank(b))) : newton_class(b, i, space);
    };
    CohomElement conv(space);
    for (int i = 0; i <= k; ++i) {
        conv += (s(e, i) * s(f, k - i)).scaled(Rational(binomial(k, i)));
    }
    return expect_equal(newton_class(e * f, k, space), conv,
                        "S_" + std::to_string(k) + "(" + e.str() + " * " + f.str() + ")");
}

Outcome ch_additive(const KElement &x, const KElement &y, const PolySpace &space)
{
    return expect_equal(chern_character(x + y, space), chern_character(x, space) + chern_character(y, space),
                        "Ch(x+y) for x=" + x.str() + ", y=" + y.str());
}

Outcome ch_multiplicative(const KElement &x, const KElement &y, const PolySpace &space)
{
    return expect_equal(chern_character(x * y, space), chern_character(x, space) * chern_character(y, space),
                        "Ch(xy) for x=" + x.str() + ", y=" + y.str());
}

Outcome ch_unit_and_rank(const KElement &x, const PolySpace &space)
{
    const CohomElement ch = chern_character(x, space);
    return first_of({
        expect_equal(chern_character(KElement::unit(x.m()), space), CohomElement::one(space), "Ch(1)"),
        expect_equal(ch.homogeneous_component(0), CohomElement::constant(space, Rational(rank(x))),
                     "degree-0 part of Ch(" + x.str() + ")"),
    });
}

Outcome ch_routes(const KElement &e, const PolySpace &space)
{
    return expect_equal(chern_character(e, space), chern_character_via_newton(e, space),
                        "exponential vs Newton-class Ch(" + e.str() + ")");
}

Outcome diagram(const KElement &x, int k, const PolySpace &space)
{
    const CohomElement rhs = steenrod_adams(k, chern_character(x, space));
    const std::string tag = "(k=" + std::to_string(k) + ", x=" + x.str() + ")";
    return first_of({
        expect_equal(chern_character(adams_split(x, k), space), rhs, "Ch psi^k vs psi^k_H Ch " + tag),
        expect_equal(chern_character(adams_newton(x, k), space), rhs, "Ch psi^k (Newton) vs psi^k_H Ch " + tag),
    });
}

Outcome steenrod_laws(const KElement &x, const KElement &y, int k, int l, const PolySpace &space)
{
    const CohomElement a = chern_character(x, space);
    const CohomElement b = chern_character(y, space);
    const std::string tag = " (k=" + std::to_string(k) + ", l=" + std::to_string(l) + ")";
    return first_of({
        expect_equal(steenrod_adams(k, a * b), steenrod_adams(k, a) * steenrod_adams(k, b), "psi_H(ab)" + tag),
        expect_equal(steenrod_adams(k, a + b), steenrod_adams(k, a) + steenrod_adams(k, b), "psi_H(a+b)" + tag),
        expect_equal(steenrod_adams(k, CohomElement::one(space)), CohomElement::one(space), "psi_H(1)" + tag),
        expect_equal(steenrod_adams(k, steenrod_adams(l, a)), steenrod_adams(k * l, a), "psi_H^k psi_H^l" + tag),
    });
}

Outcome sw_additive(const KElement &f, const KElement &g, const PolySpace &space)
{
    return expect_equal(sw_character(f + g, space), sw_character(f, space) + sw_character(g, space),
                        "SW character of " + f.str() + " + " + g.str());
}

Outcome pullback_naturality(const KElement &e, const std::vector<std::vector<int>> &matrix, const PolySpace &space)
{
    std::map<std::size_t, CohomElement> assignment;
    for (std::size_t j = 0; j < matrix.size(); ++j) {
        CohomElement image(space);
        for (std::size_t l = 0; l < matrix[j].size(); ++l) {
            image += CohomElement::variable(space, l).scaled(Rational(matrix[j][l]));
        }
        // zero is homogeneous of every degree
        assignment.emplace(j, std::move(image));
    }
    const KElement pulled = pullback_lines(e, matrix);
    for (int i = 0; i <= rank_of(e); ++i) {
        if (auto o = expect_equal(pullback(chern_class(e, i, space), assignment), chern_class(pulled, i, space),
                                  "f^* c_" + std::to_string(i) + "(" + e.str() + ")")) {
            return o;
        }
    }
    return expect_equal(pullback(chern_character(e, space), assignment), chern_character(pulled, space),
                        "f^* Ch(" + e.str() + ")");
}

} // namespace checks

bool VerifyReport::all_passed() const
{
    return std::all_of(identities.begin(), identities.end(), [](const auto &r) { return r.failed == 0; });
}

std::string VerifyReport::str() const
{
    std::string out;
    int failing = 0;
    for (const auto &r : identities) {
        const bool ok = r.failed == 0;
        failing += ok ? 0 : 1;
        out += std::string(ok ? "PASS " : "FAIL ") + r.name + " " + std::to_string(r.passed) + "/"
               + std::to_string(r.passed + r.failed) + "\n";
        if (!ok) {
            out += "     first failure: " + r.first_failure + "\n";
        }
    }
    if (failing == 0) {
        out += "all " + std::to_string(identities.size()) + " identities passed\n";
    } else {
        out += std::to_string(failing) + " of " + std::to_string(identities.size()) + " identities failed\n";
    }
    return out;
}

namespace
{

class Recorder
{
public:
    template <typename F>
    void run(const std::string &name, F &&check)
    {
        checks::Outcome outcome;
        try {
            outcome = check();
        } catch (const std::exception &e) {
            outcome = std::string("exception: ") + e.what();
        }
        IdentityResult &r = slot(name);
        if (outcome) {
            if (r.failed++ == 0) {
                r.first_failure = *outcome;
            }
        } else {
            ++r.passed;
        }
    }

    VerifyReport finish() && { return VerifyReport{std::move(m_results)}; }

private:
    IdentityResult &slot(const std::string &name)
    {
        const auto [it, inserted] = m_index.try_emplace(name, m_results.size());
        if (inserted) {
            m_results.push_back(IdentityResult{name, 0, 0, {}});
        }
        return m_results[it->second];
    }

    std::vector<IdentityResult> m_results;
    std::map<std::string, std::size_t> m_index;
};

} // namespace

VerifyReport verify_suite(const VerifyOptions &options)
{
    if (options.trials < 1) {
        throw std::invalid_argument("verify_suite: trials must be >= 1");
    }
    if (options.trunc == unbounded_degree || options.trunc < 2 || options.order < 1) {
        throw std::invalid_argument("verify_suite: needs a finite truncation >= 2 and order >= 1");
    }
    Recorder rec;
    BundleGenerator gen(options.seed);

    rec.run("newton_table", [] { return checks::newton_table(); });
    for (int k = 1; k <= 8; ++k) {
        for (int n = 1; n <= 6; ++n) {
            rec.run("power_sum_lemma", [=] { return checks::power_sum_lemma(k, n); });
        }
    }

    const int lambda_order = std::min(options.order, 6);
    const Degree sw_trunc = std::min(options.trunc, 6);
    for (int trial = 0; trial < options.trials; ++trial) {
        const auto m = static_cast<std::size_t>(gen.uniform(1, 3));
        const PolySpace space = cohom_space(m, options.trunc);
        const PolySpace sw = sw_space(m, sw_trunc);
        const KElement x = gen.virtual_element(m);
        const KElement y = gen.virtual_element(m);
        const KElement e = gen.effective(m, 3);
        const KElement f = gen.effective(m, 3);
        const KElement big_e = gen.effective(m, 4);
        const KElement big_f = gen.effective(m, 4);
        const LineExponent line = gen.exponent(m, 3);

        std::vector<Integer> series(static_cast<std::size_t>(gen.uniform(1, 5)));
        for (auto &a : series) {
            a = Integer(gen.uniform(-3, 3));
        }
        std::vector<std::size_t> order(static_cast<std::size_t>(rank(e).to_long()));
        std::iota(order.begin(), order.end(), std::size_t{0});
        for (std::size_t i = order.size(); i > 1; --i) {
            std::swap(order[i - 1], order[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(i) - 1))]);
        }
        const auto matrix = gen.matrix(m, 1);
        const int k = gen.uniform(1, 5);
        const int l = gen.uniform(1, 5);

        const PolySpace mod2_space{VarTable::uniform("z", 2, 1), 6};
        std::vector<Poly<Integer>> values;
        for (int i = 0; i < 3; ++i) {
            Poly<Integer> v(mod2_space);
            for (int j = 0; j < 3; ++j) {
                v.add_term({gen.uniform(0, 2), gen.uniform(0, 2)}, Integer(gen.uniform(-3, 3)));
            }
            values.push_back(std::move(v));
        }
        rec.run("newton_mod2_reduction", [&] { return checks::newton_mod2_reduction(gen.uniform(1, 6), values); });

        rec.run("gamma_reduced_line", [&] { return checks::gamma_reduced_line(line, options.order); });
        rec.run("lambda_multiplicative",
                [&] { return checks::lambda_multiplicative(big_e, big_f, lambda_order); });
        rec.run("gamma_multiplicative", [&] { return checks::gamma_multiplicative(x, y, lambda_order); });
        rec.run("newton_series_additive", [&] { return checks::newton_series_additive(series, x, y); });
        for (int kk = 1; kk <= 5; ++kk) {
            rec.run("adams_dual_route", [&] { return checks::adams_dual_route(x, kk); });
        }
        rec.run("adams_ring_laws", [&] { return checks::adams_ring_laws(x, y, k); });
        rec.run("rank_laws", [&] { return checks::rank_laws(x, y); });
        rec.run("gamma_one", [&] { return checks::gamma_one(x); });
        rec.run("ktheory_whitney", [&] { return checks::ktheory_whitney(e, f); });
        rec.run("chern_whitney", [&] { return checks::chern_whitney(e, f, space); });
        rec.run("chern_permutation", [&] { return checks::chern_permutation(e, order, space); });
        rec.run("chern_dual_route", [&] { return checks::chern_dual_route(big_e, space); });
        rec.run("projective_relation", [&] { return checks::projective_relation(big_e, space); });
        for (int kk = 1; kk <= 5; ++kk) {
            rec.run("newton_class_additive", [&] { return checks::newton_class_additive(e, f, kk, space); });
            rec.run("newton_class_power_sum", [&] { return checks::newton_class_power_sum(e, kk, space); });
            rec.run("newton_class_tensor", [&] { return checks::newton_class_tensor(e, f, kk, space); });
        }
        rec.run("ch_additive", [&] { return checks::ch_additive(x, y, space); });
        rec.run("ch_multiplicative", [&] { return checks::ch_multiplicative(x, y, space); });
        rec.run("ch_unit_and_rank", [&] { return checks::ch_unit_and_rank(x, space); });
        rec.run("ch_routes", [&] { return checks::ch_routes(e, space); });
        for (int kk = 1; kk <= 5; ++kk) {
            rec.run("diagram", [&] { return checks::diagram(x, kk, space); });
        }
        rec.run("steenrod_laws", [&] { return checks::steenrod_laws(x, y, k, l, space); });
        rec.run("sw_additive", [&] { return checks::sw_additive(e, f, sw); });
        rec.run("pullback_naturality", [&] { return checks::pullback_naturality(e, matrix, space); });
    }
    return std::move(rec).finish();
}

} // namespace charcalc
