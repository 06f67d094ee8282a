#include "poisson/parser.hpp"

#include <cctype>
#include <limits>
#include <set>

#include "poisson/errors.hpp"

namespace poisson {

namespace {

constexpr unsigned max_exponent = 4096;

bool is_ident_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool is_ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_digit(char c)
{
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

class PolyParser {
public:
    PolyParser(std::string_view text, std::span<const std::string> names) : text_(text), names_(names) {}

    Polynomial parse()
    {
        Polynomial result = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail(std::string("unexpected '") + text_[pos_] + "'");
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr()
    {
        const bool negate = accept('-');
        Polynomial acc = term();
        if (negate)
            acc = -acc;
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        while (accept('*'))
            acc = acc * factor();
        return acc;
    }

    Polynomial factor()
    {
        Polynomial base = atom();
        if (!accept('^'))
            return base;
        skip_ws();
        if (pos_ >= text_.size() || !is_digit(text_[pos_]))
            fail("exponent must be a non-negative integer literal");
        const mpz_class e = nat();
        if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == '/'))
            fail("exponent must be a non-negative integer literal");
        if (e > max_exponent)
            fail("exponent exceeds " + std::to_string(max_exponent));
        return base.pow(static_cast<unsigned>(e.get_ui()));
    }

    Polynomial atom()
    {
        skip_ws();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')'))
                fail("expected ')'");
            return inner;
        }
        if (is_digit(c)) {
            const mpz_class num = nat();
            mpz_class den = 1;
            if (accept('/')) {
                skip_ws();
                if (pos_ >= text_.size() || !is_digit(text_[pos_]))
                    fail("expected denominator digits");
                const std::size_t at = pos_;
                den = nat();
                if (den == 0)
                    throw ParseError("zero denominator", at);
            }
            return Polynomial::constant(names_.size(), Rational(num, den));
        }
        if (is_ident_start(c)) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && is_ident_char(text_[pos_]))
                ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            for (std::size_t i = 0; i < names_.size(); ++i)
                if (names_[i] == name)
                    return Polynomial::variable(names_.size(), i);
            throw ParseError("unknown variable '" + std::string(name) + "'", start);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    mpz_class nat()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_digit(text_[pos_]))
            ++pos_;
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    std::string_view text_;
    std::span<const std::string> names_;
    std::size_t pos_ = 0;
};

} // namespace

void validate_var_names(std::span<const std::string> var_names)
{
    std::set<std::string_view> seen;
    for (const auto& name : var_names) {
        if (name.empty() || !is_ident_start(name.front()))
            throw std::invalid_argument("invalid variable name '" + name + "'");
        for (char c : name)
            if (!is_ident_char(c))
                throw std::invalid_argument("invalid variable name '" + name + "'");
        if (!seen.insert(name).second)
            throw std::invalid_argument("duplicate variable name '" + name + "'");
    }
}

Polynomial parse_poly(std::string_view text, std::span<const std::string> var_names)
{
    if (var_names.empty())
        throw DimensionError("polynomial dimension must be positive");
    validate_var_names(var_names);
    return PolyParser(text, var_names).parse();
}

std::string to_string(const Polynomial& p, std::span<const std::string> var_names)
{
    if (var_names.size() != p.dim())
        throw DimensionError("variable name count does not match polynomial dimension");
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = c.sign() < 0;
        const Rational magnitude = negative ? -c : c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        std::string factors;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!factors.empty())
                factors += '*';
            factors += var_names[i];
            if (e[i] > 1)
                factors += '^' + std::to_string(e[i]);
        }
        if (factors.empty())
            out += magnitude.to_string();
        else if (magnitude.is_one())
            out += factors;
        else
            out += magnitude.to_string() + "*" + factors;
    }
    return out;
}

std::vector<std::string> default_var_names(std::size_t n)
{
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        names.push_back("x" + std::to_string(i));
    return names;
}

} // namespace poisson
