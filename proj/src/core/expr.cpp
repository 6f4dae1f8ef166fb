#include "hg/core/expr.hpp"

#include <cctype>

#include "hg/core/error.hpp"

namespace hg {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Scalar run() {
        Scalar v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) {
        raise(ErrorKind::Parse, "in \"" + s_ + "\" at " + std::to_string(pos_) + ": " + why);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar expr() {
        Scalar v = term();
        while (true) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    Scalar term() {
        Scalar v = unary();
        while (true) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                Scalar d = unary();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    Scalar unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    Scalar power() {
        Scalar base = atom();
        if (!eat('^')) return base;
        bool neg = eat('-');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("integer exponent expected");
        if (pos_ - start > 6) fail("exponent too large");
        long e = std::stol(s_.substr(start, pos_ - start));
        if (neg && base.is_zero()) fail("zero to a negative power");
        return base.pow(neg ? -e : e);
    }

    Scalar atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!eat(')')) fail("')' expected");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string digits = s_.substr(start, pos_ - start);
            std::string frac;
            if (pos_ < s_.size() && s_[pos_] == '.') {
                ++pos_;
                std::size_t fs = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
                frac = s_.substr(fs, pos_ - fs);
                if (frac.empty()) fail("digits expected after '.'");
            }
            mpq_class v(mpz_class(digits + frac, 10), mpz_class("1" + std::string(frac.size(), '0'), 10));
            v.canonicalize();
            return Scalar(v);
        }
        if (c >= 'a' && c <= 'z') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   ((s_[pos_] >= 'a' && s_[pos_] <= 'z') || std::isdigit(static_cast<unsigned char>(s_[pos_])) ||
                    s_[pos_] == '_'))
                ++pos_;
            return Scalar::parameter(s_.substr(start, pos_ - start));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(const std::string& text) { return Parser(text).run(); }

}  // namespace hg
