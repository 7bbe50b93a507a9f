#include "wildstack/parser.hpp"

#include <cctype>

namespace wildstack {

namespace {

class Parser {
public:
    Parser(std::string_view src, std::int64_t p) : src_(src), p_(p) {}

    FpRat run() {
        FpRat v = parse_sum();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError("unexpected trailing input", pos_);
        return v;
    }

private:
    std::string_view src_;
    std::int64_t p_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    FpRat parse_sum() {
        FpRat acc = parse_product();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + parse_product();
            } else if (c == '-') {
                ++pos_;
                acc = acc - parse_product();
            } else {
                return acc;
            }
        }
    }

    FpRat parse_product() {
        FpRat acc = parse_unary();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * parse_unary();
            } else if (c == '/') {
                std::size_t at = pos_;
                ++pos_;
                FpRat d = parse_unary();
                if (d.is_zero()) throw ParseError("division by the zero expression", at);
                acc = acc / d;
            } else {
                return acc;
            }
        }
    }

    FpRat parse_unary() {
        if (consume('-')) return -parse_unary();
        return parse_power();
    }

    FpRat parse_power() {
        FpRat base = parse_atom();
        while (peek() == '^') {
            std::size_t at = pos_;
            ++pos_;
            if (peek() == '-')
                throw ParseError("negative exponent; rewrite as 1/(...)^k", pos_);
            base = pow(base, parse_exponent(at));
        }
        return base;
    }

    std::int64_t parse_exponent(std::size_t caret_at) {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            throw ParseError("integer exponent expected after '^'", caret_at + 1);
        std::int64_t v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + (src_[pos_] - '0');
            if (v > 1'000'000) throw ParseError("exponent too large", pos_);
            ++pos_;
        }
        return v;
    }

    FpRat parse_atom() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of expression", pos_);
        char c = src_[pos_];
        if (c == '(') {
            std::size_t at = pos_;
            ++pos_;
            FpRat v = parse_sum();
            if (!consume(')')) throw ParseError("unbalanced '('", at);
            return v;
        }
        if (c == 'x') {
            ++pos_;
            return FpRat::variable(p_);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t v = 0;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                v = (v * 10 + (src_[pos_] - '0')) % p_;
                ++pos_;
            }
            return FpRat::constant(FpElem{v, p_});
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
};

}  // namespace

FpRat parse_rational_expr(std::string_view src, std::int64_t p) {
    require_prime(p);
    return Parser(src, p).run();
}

}  // namespace wildstack
