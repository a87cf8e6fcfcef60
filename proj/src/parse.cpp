#include "esdef/parse.hpp"

#include "esdef/errors.hpp"

#include <cctype>

namespace esdef {

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    LocalPoly run()
    {
        skip();
        if (pos_ == s_.size())
            throw SyntaxError("empty input", pos_);
        LocalPoly p = expr();
        skip();
        if (pos_ != s_.size())
            throw SyntaxError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return p;
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    // '-' also as U+2212 MINUS SIGN
    bool minus_at()
    {
        if (pos_ < s_.size() && s_[pos_] == '-')
            return true;
        return s_.substr(pos_, 3) == "\xe2\x88\x92";
    }
    void eat_minus() { pos_ += s_[pos_] == '-' ? 1 : 3; }

    bool peek(char c)
    {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    LocalPoly expr()
    {
        LocalPoly acc = term();
        for (;;) {
            skip();
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (minus_at()) {
                eat_minus();
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    bool starts_factor()
    {
        skip();
        if (pos_ >= s_.size())
            return false;
        const char c = s_[pos_];
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c));
    }

    LocalPoly term()
    {
        LocalPoly acc = unary();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc = acc * unary();
            } else if (peek('/')) {
                const std::size_t at = pos_++;
                skip();
                Rational d = number();
                if (is_zero(d))
                    throw SyntaxError("division by zero", at);
                acc = acc.scaled(1 / d);
            } else if (starts_factor()) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    LocalPoly unary()
    {
        skip();
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        if (minus_at()) {
            eat_minus();
            return -unary();
        }
        return power();
    }

    LocalPoly power()
    {
        LocalPoly base = primary();
        while (peek('^')) {
            ++pos_;
            skip();
            const std::size_t at = pos_;
            Integer e = integer();
            if (e > 10000)
                throw SyntaxError("exponent too large", at);
            base = power_truncated(base, static_cast<int>(e.get_si()), -1);
        }
        return base;
    }

    Integer integer()
    {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            throw SyntaxError("expected a number", start);
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    // integer literal, optionally followed by "/integer"
    Rational number()
    {
        Rational q(integer());
        if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
            std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
            const std::size_t at = pos_;
            ++pos_;
            Integer d = integer();
            if (d == 0)
                throw SyntaxError("zero denominator", at);
            q = Rational(q.get_num(), d);
            q.canonicalize();
        }
        return q;
    }

    LocalPoly primary()
    {
        skip();
        if (pos_ >= s_.size())
            throw SyntaxError("unexpected end of input", pos_);
        const char c = s_[pos_];
        if (c == '(') {
            const std::size_t open = pos_++;
            LocalPoly p = expr();
            if (!peek(')'))
                throw SyntaxError("unbalanced '('", open);
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return LocalPoly(number());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t at = pos_++;
            Monomial m;
            if (c == 'x')
                m = {1, 0};
            else if (c == 'y')
                m = {0, 1};
            else
                throw Error(ErrorCode::UnknownVariable,
                            std::string("unknown variable '") + c + "' at position " + std::to_string(at));
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                const std::size_t eat = pos_;
                Integer e = integer();
                if (e > 10000)
                    throw SyntaxError("exponent too large", eat);
                m = {m.a * static_cast<int>(e.get_si()), m.b * static_cast<int>(e.get_si())};
            }
            return LocalPoly::term(m, Rational(1));
        }
        throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

LocalPoly parse_poly(std::string_view text)
{
    return Parser(text).run();
}

}  // namespace esdef
