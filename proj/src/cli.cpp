#include <charcalc/cli.hpp>

#include <functional>
#include <iostream>
#include <iterator>
#include <map>

#include <CLI11.hpp>

#include <charcalc/cohom.hpp>
#include <charcalc/expr.hpp>
#include <charcalc/kring.hpp>
#include <charcalc/render.hpp>
#include <charcalc/symfun.hpp>
#include <charcalc/verify.hpp>

namespace charcalc
{

namespace
{

class usage_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct Invocation {
    Config config;
    std::string coeff_name = "q";
    std::string route = "newton";
    std::string expression;
    int index = 0; // i or k, depending on the command
};

struct Output {
    std::string text;     // already newline-terminated
    nlohmann::json json;  // result payload
    int code = exit_ok;
};

void validate(const Config &c)
{
    if (c.m && *c.m < 1) {
        throw usage_error("--m must be >= 1");
    }
    if (c.trunc < 2 || c.trunc % 2 != 0) {
        throw usage_error("--trunc must be an even integer >= 2");
    }
    if (c.order < 1) {
        throw usage_error("--order must be >= 1");
    }
    if (c.trials < 1) {
        throw usage_error("--trials must be >= 1");
    }
}

void require_rational(const Invocation &inv, const std::string &command)
{
    if (inv.config.coeff != CoeffMode::q) {
        throw usage_error("command '" + command + "' needs rational coefficients (--coeff q)");
    }
}

std::string read_all(std::istream &in)
{
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
        text.pop_back();
    }
    return text;
}

template <Coefficient C>
Output poly_output(const Poly<C> &p, bool by_degree)
{
    return Output{by_degree ? render_by_degree(p) : p.str() + "\n", to_json(p)};
}

Output kelement_output(const KElement &x) { return Output{x.str() + "\n", to_json(x)}; }

using Handler = std::function<Output(const Invocation &)>;

std::map<std::string, Handler> handlers()
{
    std::map<std::string, Handler> h;
    const auto bundle = [](const Invocation &inv) {
        return parse_kelement(inv.expression, inv.config.m);
    };
    const auto space_for = [](const KElement &x, const Config &c) { return cohom_space(x.m(), c.trunc); };

    h["ch"] = [=](const Invocation &inv) {
        require_rational(inv, "ch");
        const KElement x = bundle(inv);
        return poly_output(chern_character(x, space_for(x, inv.config)), inv.config.by_degree);
    };
    h["chern"] = [=](const Invocation &inv) {
        require_rational(inv, "chern");
        const KElement x = bundle(inv);
        return poly_output(chern_class(x, inv.index, space_for(x, inv.config)), inv.config.by_degree);
    };
    h["newton-class"] = [=](const Invocation &inv) {
        require_rational(inv, "newton-class");
        const KElement x = bundle(inv);
        return poly_output(newton_class(x, inv.index, space_for(x, inv.config)), inv.config.by_degree);
    };
    h["psiH"] = [=](const Invocation &inv) {
        require_rational(inv, "psiH");
        const KElement x = bundle(inv);
        return poly_output(steenrod_adams(inv.index, chern_character(x, space_for(x, inv.config))),
                           inv.config.by_degree);
    };
    h["lambda"] = [=](const Invocation &inv) {
        const TSeries s = lambda_series(bundle(inv), inv.config.order);
        return Output{s.str() + "\n", to_json(s)};
    };
    h["gamma"] = [=](const Invocation &inv) {
        const TSeries s = gamma_series(bundle(inv), inv.config.order);
        return Output{s.str() + "\n", to_json(s)};
    };
    h["psi"] = [=](const Invocation &inv) {
        const KElement x = bundle(inv);
        if (inv.route == "split") {
            return kelement_output(adams_split(x, inv.index));
        }
        return kelement_output(adams_newton(x, inv.index));
    };
    h["kchern"] = [=](const Invocation &inv) {
        return kelement_output(ktheory_chern(bundle(inv), inv.index));
    };
    h["rank"] = [=](const Invocation &inv) {
        const Integer r = rank(bundle(inv));
        return Output{r.str() + "\n", r.str()};
    };
    h["sw"] = [=](const Invocation &inv) {
        const KElement x = bundle(inv);
        return poly_output(sw_character(x, sw_space(x.m(), inv.config.trunc)), inv.config.by_degree);
    };
    h["newton"] = [](const Invocation &inv) {
        const SigmaPoly q = newton_polynomial(inv.index);
        if (inv.config.coeff == CoeffMode::f2) {
            return poly_output(q.map_coefficients([](const Integer &c) { return F2(c); }), inv.config.by_degree);
        }
        return poly_output(q, inv.config.by_degree);
    };
    h["verify"] = [](const Invocation &inv) {
        VerifyOptions options;
        options.seed = inv.config.seed;
        options.trials = inv.config.trials;
        options.trunc = inv.config.trunc;
        options.order = inv.config.order;
        const VerifyReport report = verify_suite(options);
        nlohmann::json identities = nlohmann::json::array();
        for (const auto &r : report.identities) {
            identities.push_back({{"name", r.name},
                                  {"passed", r.passed},
                                  {"failed", r.failed},
                                  {"first_failure", r.first_failure}});
        }
        nlohmann::json payload = {{"seed", inv.config.seed},
                                  {"trials", inv.config.trials},
                                  {"all_passed", report.all_passed()},
                                  {"identities", std::move(identities)}};
        return Output{report.str(), std::move(payload), report.all_passed() ? exit_ok : exit_verification_failed};
    };
    return h;
}

} // namespace

int run_command(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err)
{
    Invocation inv;
    CLI::App app{"Chern character, Adams operations and characteristic classes on split bundles", "charcalc"};
    app.require_subcommand(1);

    std::size_t m = 0;
    auto *m_opt = app.add_option("--m", m, "number of base line classes (default: from the expression)");
    app.add_option("--trunc", inv.config.trunc, "cohomology truncation degree (even)")->capture_default_str();
    app.add_option("--order", inv.config.order, "t-series order T")->capture_default_str();
    app.add_option("--coeff", inv.coeff_name, "coefficients: q or f2")
        ->check(CLI::IsMember({"q", "f2"}))
        ->capture_default_str();
    app.add_flag("--json", inv.config.json, "emit JSON");
    app.add_flag("--by-degree", inv.config.by_degree, "group cohomology output by degree");
    app.add_option("--seed", inv.config.seed, "seed for verify")->capture_default_str();
    app.add_option("--trials", inv.config.trials, "trials for verify")->capture_default_str();

    const auto add = [&](const std::string &name, const std::string &help, const char *index_name) {
        CLI::App *sub = app.add_subcommand(name, help)->fallthrough();
        if (index_name != nullptr) {
            sub->add_option(index_name, inv.index, index_name)->required();
        }
        return sub;
    };
    const auto with_expr = [&](CLI::App *sub) {
        sub->add_option("expr", inv.expression, "bundle expression, or - for stdin")->required();
        return sub;
    };

    with_expr(add("ch", "Chern character Ch(x)", nullptr));
    with_expr(add("chern", "Chern class c_i(E)", "i"));
    with_expr(add("newton-class", "Newton class S_k(E)", "k"));
    with_expr(add("lambda", "lambda_t(x)", nullptr));
    with_expr(add("gamma", "gamma_t(x)", nullptr));
    CLI::App *psi = with_expr(add("psi", "Adams operation psi^k(x)", "k"));
    psi->add_option("--route", inv.route, "newton or split")->check(CLI::IsMember({"newton", "split"}));
    with_expr(add("psiH", "psi^k_H(Ch(x))", "k"));
    with_expr(add("kchern", "K-theory Chern class c_i(E)", "i"));
    add("newton", "Newton polynomial s_k", "k");
    with_expr(add("sw", "Stiefel-Whitney character over F2", nullptr));
    with_expr(add("rank", "virtual rank", nullptr));
    add("verify", "run every identity on seeded random bundles", nullptr);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }

    try {
        if (m_opt->count() > 0) {
            inv.config.m = m;
        }
        inv.config.coeff = inv.coeff_name == "f2" ? CoeffMode::f2 : CoeffMode::q;
        validate(inv.config);
        if (inv.expression == "-") {
            inv.expression = read_all(in);
        }

        const std::string command = app.get_subcommands().front()->get_name();
        const Output result = handlers().at(command)(inv);
        if (inv.config.json) {
            nlohmann::json doc = {{"schema", json_schema}, {"command", command}, {"result", result.json}};
            if (!inv.expression.empty()) {
                doc["input"] = inv.expression;
            }
            out << doc.dump(2) << "\n";
        } else {
            out << result.text;
        }
        return result.code;
    } catch (const parse_error &e) {
        err << "error: syntax error " << e.what() << "\n";
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
    }
    return exit_input_error;
}

} // namespace charcalc
