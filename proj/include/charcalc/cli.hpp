#ifndef CHARCALC_CLI_HPP
#define CHARCALC_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <charcalc/poly.hpp>

namespace charcalc
{

enum class CoeffMode { q, f2 };

struct Config {
    std::optional<std::size_t> m; // inferred from the expression when unset
    Degree trunc = 10;
    int order = 8;
    CoeffMode coeff = CoeffMode::q;
    bool json = false;
    bool by_degree = false;
    std::uint64_t seed = 0;
    int trials = 50;
};

enum ExitCode : int { exit_ok = 0, exit_input_error = 1, exit_verification_failed = 2 };

// Runs one charcalc invocation; `args` excludes the program name. An
// expression argument of "-" is read from `in`.
int run_command(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace charcalc

#endif
