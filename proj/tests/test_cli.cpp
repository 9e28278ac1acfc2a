#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include <charcalc/cli.hpp>
#include <charcalc/symfun.hpp>

using namespace charcalc;

namespace
{

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string &stdin_text = "")
{
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_command(args, in, out, err);
    return Run{code, out.str(), err.str()};
}

} // namespace

TEST_CASE("golden outputs")
{
    const Run ch = run({"ch", "L(1)+L(2)", "--m", "1", "--trunc", "6"});
    CHECK(ch.code == 0);
    CHECK(ch.out == "2 + 3*x1 + 5/2*x1^2 + 3/2*x1^3\n");

    const Run psi = run({"psi", "2", "L(1)-1", "--m", "1"});
    CHECK(psi.code == 0);
    CHECK(psi.out == "L(2) - 1\n");

    const Run newton = run({"newton", "2"});
    CHECK(newton.code == 0);
    CHECK(newton.out == "s1^2 - 2*s2\n");
}

TEST_CASE("other commands")
{
    CHECK(run({"rank", "L(1,0)+L(0,1)"}).out == "2\n");
    CHECK(run({"chern", "2", "L(1,0)+L(0,1)"}).out == "x1*x2\n");
    CHECK(run({"newton-class", "2", "L(1)+L(2)"}).out == "5*x1^2\n");
    CHECK(run({"lambda", "-1", "--order", "3"}).out == "1 - t + t^2 - t^3\n");
    CHECK(run({"gamma", "L(1)-1", "--order", "5"}).out == "1 + (L(1) - 1)*t\n");
    CHECK(run({"psi", "3", "L(1,1)", "--route", "split"}).out == "L(3,3)\n");
    CHECK(run({"psiH", "2", "L(1)", "--trunc", "4"}).out == "1 + 2*x1 + 2*x1^2\n");
    CHECK(run({"kchern", "1", "L(1)"}).out == "-L(1) + 1\n");
    CHECK(run({"sw", "L(1)", "--trunc", "4"}).out == "1 + y1 + y1^2 + y1^3 + y1^4\n");
    CHECK(run({"newton", "3", "--coeff", "f2"}).out == "s1^3 + s1*s2 + s3\n");
    CHECK(run({"ch", "L(1)", "--trunc", "4", "--by-degree"}).out == "H^0: 1\nH^2: x1\nH^4: 1/2*x1^2\n");
    CHECK(run({"--trunc", "6", "ch", "L(1)+L(2)"}).out == "2 + 3*x1 + 5/2*x1^2 + 3/2*x1^3\n");
}

TEST_CASE("expression from stdin")
{
    const Run r = run({"ch", "-", "--trunc", "6"}, "L(1)+L(2)\n");
    CHECK(r.code == 0);
    CHECK(r.out == "2 + 3*x1 + 5/2*x1^2 + 3/2*x1^3\n");
}

TEST_CASE("json output")
{
    const Run r = run({"psi", "2", "L(1)-1", "--json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["schema"] == "charcalc/1");
    CHECK(doc["command"] == "psi");
    CHECK(doc["input"] == "L(1)-1");
    CHECK(doc["result"]["m"] == 1);
    CHECK(doc["result"]["terms"].size() == 2);

    const auto ch = nlohmann::json::parse(run({"ch", "L(1)", "--trunc", "2", "--json"}).out);
    CHECK(ch["result"]["vars"] == nlohmann::json::array({"x1"}));
    CHECK(ch["result"]["trunc"] == 2);
    CHECK(ch["result"]["terms"][1]["coeff"]["num"] == "1");
}

TEST_CASE("input errors exit with 1")
{
    const Run syntax = run({"ch", "L(1,2"});
    CHECK(syntax.code == 1);
    CHECK(syntax.err == "error: syntax error at offset 5: expected ')' before end of input\n");
    CHECK(syntax.out.empty());

    CHECK(run({"frobnicate", "L(1)"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"ch", "L(1)", "--trunc", "5"}).code == 1);
    CHECK(run({"ch", "L(1)", "--trunc", "x"}).code == 1);
    CHECK(run({"ch", "L(1)", "--coeff", "f2"}).code == 1);
    CHECK(run({"ch", "L(1)", "--coeff", "z"}).code == 1);
    CHECK(run({"chern", "1", "L(1)-1"}).code == 1);
    CHECK(run({"psi", "0", "L(1)"}).code == 1);
    CHECK(run({"psi", "2", "L(1)", "--route", "other"}).code == 1);
    CHECK(run({"ch", "L(1,0)", "--m", "1"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("rendering is deterministic")
{
    const std::vector<std::string> args{"ch", "3*L(1,-1)-L(0,2)+L(2,1)*L(1,0)", "--trunc", "8"};
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("verify passes, and fails on a corrupted Newton table")
{
    const Run ok = run({"verify", "--seed", "0", "--trials", "50"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("FAIL") == std::string::npos);
    CHECK(ok.out.find("identities passed") != std::string::npos);

    const Run small = run({"verify", "--trials", "1", "--json"});
    CHECK(small.code == 0);
    CHECK(nlohmann::json::parse(small.out)["result"]["all_passed"] == true);

    {
        const SigmaPoly q3 = newton_polynomial(3);
        ScopedNewtonOverride corrupt(3, q3 + SigmaPoly::variable(q3.space(), 2));
        const Run bad = run({"verify", "--trials", "5"});
        CHECK(bad.code == 2);
        CHECK(bad.out.find("FAIL") != std::string::npos);
    }
    CHECK(run({"verify", "--trials", "2"}).code == 0);
}
