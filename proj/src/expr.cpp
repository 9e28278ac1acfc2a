#include <charcalc/expr.hpp>

#include <cctype>
#include <limits>

namespace charcalc
{

namespace
{

class Parser
{
public:
    Parser(std::string_view text, std::optional<std::size_t> m) : m_text(text), m_m(m) {}

    ParsedBundle run()
    {
        BundleExpr e = expr();
        skip_space();
        if (m_pos != m_text.size()) {
            fail("unexpected '" + std::string(1, m_text[m_pos]) + "'");
        }
        return ParsedBundle{std::move(e), m_m.value_or(1)};
    }

private:
    [[noreturn]] void fail(const std::string &message) const { throw parse_error(m_pos, message); }

    void skip_space()
    {
        while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
    }

    bool peek(char c)
    {
        skip_space();
        return m_pos < m_text.size() && m_text[m_pos] == c;
    }

    bool accept(char c)
    {
        if (peek(c)) {
            ++m_pos;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            fail(m_pos < m_text.size() ? "expected '" + std::string(1, c) + "'"
                                       : "expected '" + std::string(1, c) + "' before end of input");
        }
    }

    static BundleExpr binary(BundleExpr::Kind kind, std::size_t offset, BundleExpr lhs, BundleExpr rhs)
    {
        BundleExpr e;
        e.kind = kind;
        e.offset = offset;
        e.operands.push_back(std::move(lhs));
        e.operands.push_back(std::move(rhs));
        return e;
    }

    BundleExpr expr()
    {
        skip_space();
        const std::size_t start = m_pos;
        BundleExpr lhs;
        if (accept('-')) {
            BundleExpr neg;
            neg.kind = BundleExpr::Kind::negation;
            neg.offset = start;
            neg.operands.push_back(term());
            lhs = std::move(neg);
        } else {
            lhs = term();
        }
        while (true) {
            skip_space();
            const std::size_t op = m_pos;
            if (accept('+')) {
                lhs = binary(BundleExpr::Kind::sum, op, std::move(lhs), term());
            } else if (accept('-')) {
                lhs = binary(BundleExpr::Kind::difference, op, std::move(lhs), term());
            } else {
                return lhs;
            }
        }
    }

    BundleExpr term()
    {
        BundleExpr lhs = factor();
        while (true) {
            skip_space();
            const std::size_t op = m_pos;
            if (!accept('*')) {
                return lhs;
            }
            lhs = binary(BundleExpr::Kind::tensor, op, std::move(lhs), factor());
        }
    }

    BundleExpr factor()
    {
        skip_space();
        const std::size_t start = m_pos;
        if (m_pos >= m_text.size()) {
            fail("expected a line bundle, integer or '(' before end of input");
        }
        const char c = m_text[m_pos];
        if (c == '(') {
            ++m_pos;
            BundleExpr inner = expr();
            expect(')');
            return inner;
        }
        if (c == 'L') {
            ++m_pos;
            expect('(');
            BundleExpr e;
            e.kind = BundleExpr::Kind::line;
            e.offset = start;
            e.exponents.push_back(exponent());
            while (accept(',')) {
                e.exponents.push_back(exponent());
            }
            expect(')');
            check_arity(e.exponents.size(), start);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BundleExpr e;
            e.kind = BundleExpr::Kind::integer;
            e.offset = start;
            e.value = Integer(digits());
            return e;
        }
        fail("expected a line bundle, integer or '('");
    }

    std::string digits()
    {
        const std::size_t start = m_pos;
        while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos]))) {
            ++m_pos;
        }
        if (start == m_pos) {
            fail("expected digits");
        }
        return std::string(m_text.substr(start, m_pos - start));
    }

    int exponent()
    {
        skip_space();
        const std::size_t start = m_pos;
        bool negative = false;
        if (m_pos < m_text.size() && (m_text[m_pos] == '-' || m_text[m_pos] == '+')) {
            negative = m_text[m_pos] == '-';
            ++m_pos;
        }
        const Integer magnitude(digits());
        const Integer value = negative ? -magnitude : magnitude;
        if (!value.fits_long() || value.to_long() > std::numeric_limits<int>::max() / 64
            || value.to_long() < -std::numeric_limits<int>::max() / 64) {
            throw parse_error(start, "exponent out of range");
        }
        return static_cast<int>(value.to_long());
    }

    void check_arity(std::size_t arity, std::size_t offset)
    {
        if (!m_m) {
            m_m = arity;
        } else if (*m_m != arity) {
            throw parse_error(offset, "line bundle has " + std::to_string(arity) + " exponents, expected "
                                          + std::to_string(*m_m));
        }
    }

    std::string_view m_text;
    std::optional<std::size_t> m_m;
    std::size_t m_pos = 0;
};

} // namespace

ParsedBundle parse_bundle(std::string_view input, std::optional<std::size_t> m)
{
    if (m && *m == 0) {
        throw std::invalid_argument("the number of base line classes must be >= 1");
    }
    return Parser(input, m).run();
}

KElement evaluate(const BundleExpr &expr, std::size_t m)
{
    switch (expr.kind) {
        case BundleExpr::Kind::line:
            return KElement::line(expr.exponents);
        case BundleExpr::Kind::integer:
            return KElement::trivial(m, expr.value);
        case BundleExpr::Kind::sum:
            return evaluate(expr.operands.at(0), m) + evaluate(expr.operands.at(1), m);
        case BundleExpr::Kind::difference:
            return evaluate(expr.operands.at(0), m) - evaluate(expr.operands.at(1), m);
        case BundleExpr::Kind::tensor:
            return evaluate(expr.operands.at(0), m) * evaluate(expr.operands.at(1), m);
        case BundleExpr::Kind::negation:
            return -evaluate(expr.operands.at(0), m);
    }
    throw std::logic_error("unknown expression kind");
}

KElement parse_kelement(std::string_view input, std::optional<std::size_t> m)
{
    const ParsedBundle parsed = parse_bundle(input, m);
    return evaluate(parsed.expr, parsed.m);
}

} // namespace charcalc
