#ifndef CHARCALC_EXPR_HPP
#define CHARCALC_EXPR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <charcalc/coeff.hpp>
#include <charcalc/kring.hpp>

namespace charcalc
{

// Malformed bundle expression; offset is the byte position of the problem.
class parse_error : public std::runtime_error
{
public:
    parse_error(std::size_t offset, const std::string &message)
        : std::runtime_error("at offset " + std::to_string(offset) + ": " + message), m_offset(offset)
    {
    }

    std::size_t offset() const { return m_offset; }

private:
    std::size_t m_offset;
};

// Syntax tree of
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := 'L(' int (',' int)* ')' | integer | '(' expr ')'
struct BundleExpr {
    enum class Kind { line, integer, sum, difference, tensor, negation };

    Kind kind = Kind::integer;
    std::size_t offset = 0;
    LineExponent exponents;          // line
    Integer value;                   // integer
    std::vector<BundleExpr> operands; // sum, difference, tensor: 2; negation: 1
};

struct ParsedBundle {
    BundleExpr expr;
    std::size_t m; // number of base line classes
};

// Parses `input`. When `m` is given every atom must have exactly m
// exponents; otherwise m is taken from the first atom (1 if there is none).
ParsedBundle parse_bundle(std::string_view input, std::optional<std::size_t> m = std::nullopt);

// Evaluates with tensor products expanded bilinearly.
KElement evaluate(const BundleExpr &expr, std::size_t m);

KElement parse_kelement(std::string_view input, std::optional<std::size_t> m = std::nullopt);

} // namespace charcalc

#endif
