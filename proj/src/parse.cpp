#include "rdtm/parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace rdtm {

ParseError::ParseError(std::size_t offset, std::string expected, std::string message)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": " + message),
      offset_(offset),
      expected_(std::move(expected))
{
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Folds an expression free of x and named constants; nullopt-like via bool.
bool fold_constant(const Expr& e, double& out)
{
    if (depends_on_x(e) || !named_constants(e).empty()) return false;
    try {
        out = evaluate(e, Bindings{});
    } catch (const EvalError&) {
        return false;
    }
    return std::isfinite(out);
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr parse_all()
    {
        Expr e = parse_sum();
        skip_space();
        if (pos_ < text_.size()) fail("end of input", std::string("unexpected '") + text_[pos_] + "'");
        return e;
    }

private:
    [[noreturn]] void fail(std::string expected, const std::string& detail) const
    {
        throw ParseError(pos_, expected, detail + ", expected " + expected);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            fail(std::string("\"") + c + "\"", pos_ < text_.size() ? std::string("found '") + text_[pos_] + "'"
                                                                   : std::string("reached end of input"));
        }
    }

    Expr parse_sum()
    {
        std::vector<Expr> terms{parse_product()};
        for (;;) {
            if (accept('+')) {
                terms.push_back(parse_product());
            } else if (accept('-')) {
                terms.push_back(-parse_product());
            } else {
                break;
            }
        }
        return Node::make_add(std::move(terms));
    }

    Expr parse_product()
    {
        std::vector<Expr> factors{parse_unary()};
        for (;;) {
            if (accept('*')) {
                factors.push_back(parse_unary());
            } else {
                skip_space();
                const std::size_t at = pos_;
                if (!accept('/')) break;
                Expr lhs = Node::make_multiply(std::move(factors));
                Expr rhs = parse_unary();
                if (rhs.is_constant(0.0)) {
                    pos_ = at;
                    fail("nonzero divisor", "division by the literal 0");
                }
                factors = {lhs / rhs};
            }
        }
        return Node::make_multiply(std::move(factors));
    }

    Expr parse_unary()
    {
        if (accept('-')) {
            Expr operand = parse_unary();
            if (operand.is_constant()) return Expr::constant(-operand.constant_value());
            return -operand;
        }
        if (accept('+')) return parse_unary();
        return parse_power();
    }

    Expr parse_power()
    {
        Expr base = parse_primary();
        if (!accept('^')) return base;
        skip_space();
        const std::size_t at = pos_;
        Expr exponent = parse_unary();
        double value = 0;
        if (!fold_constant(exponent, value)) {
            pos_ = at;
            fail("numeric exponent", "exponent must be a numeric constant");
        }
        if (value == std::trunc(value) && std::fabs(value) < 1e9) {
            return pow(base, static_cast<long>(value));
        }
        return pow(base, value);
    }

    Expr parse_primary()
    {
        skip_space();
        if (pos_ >= text_.size()) fail("expression", "reached end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Expr inner = parse_sum();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (is_ident_start(c)) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '(') {
                Function fn{};
                if (!function_from_name(name, fn)) {
                    pos_ = start;
                    fail("function name", "unknown function '" + name + "'");
                }
                ++pos_;
                Expr arg = parse_sum();
                expect(')');
                return apply(fn, arg);
            }
            if (name == "x") return Expr::variable();
            return Expr::named(name);
        }
        fail("expression", std::string("unexpected '") + c + "'");
    }

    Expr parse_number()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
            ++pos_;
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
            if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
                while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
                pos_ = p;
            }
        }
        double value = 0;
        const char* first = text_.data() + start;
        const char* last = text_.data() + pos_;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec == std::errc::result_out_of_range) {
            value = std::strtod(std::string(first, last).c_str(), nullptr);
        } else if (ec != std::errc() || ptr != last) {
            pos_ = start;
            fail("number", "malformed numeric literal");
        }
        return Expr::constant(value);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace rdtm
