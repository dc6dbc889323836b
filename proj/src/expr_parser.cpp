#include "pmp/expr_parser.hpp"

#include <cctype>

namespace pmp {

namespace {

class Parser {
public:
    explicit Parser(const std::string& src) : s_(src) {}

    ParsedPoly run() {
        skip_ws();
        ParsedPoly out;
        if (peek() == '[') {
            out.value = coeff_list();
        } else {
            out.value = composition();
        }
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        out.warnings = std::move(warnings_);
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, pos_);
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    Integer integer_literal() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected an integer literal");
        return Integer(s_.substr(start, pos_ - start));
    }

    Rational rational_literal() {
        Integer num = integer_literal();
        if (pos_ < s_.size() && s_[pos_] == '/') {
            // only a literal denominator: "3/4" is one token, "x/2" is not
            std::size_t save = pos_;
            ++pos_;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                Integer den = integer_literal();
                if (den == 0) fail("zero denominator");
                return make_rational(num, den);
            }
            pos_ = save;
        }
        return Rational(num);
    }

    unsigned long uint_literal(const char* what) {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(what);
        Integer v = integer_literal();
        if (!v.fits_ulong_p()) fail("integer literal too large");
        return v.get_ui();
    }

    Poly composition() {
        Poly left = additive();
        skip_ws();
        if (eat('@')) {
            Poly right = composition();  // right-associative
            if (left.is_constant() || right.is_constant())
                warnings_.push_back("composition with a constant operand");
            return compose(left, right);
        }
        return left;
    }

    Poly additive() {
        Poly acc = multiplicative();
        while (true) {
            skip_ws();
            if (eat('+'))
                acc += multiplicative();
            else if (eat('-'))
                acc -= multiplicative();
            else
                return acc;
        }
    }

    Poly multiplicative() {
        Poly acc = unary();
        while (true) {
            skip_ws();
            if (eat('*'))
                acc *= unary();
            else
                return acc;
        }
    }

    Poly unary() {
        skip_ws();
        if (eat('-')) return -unary();
        return power();
    }

    Poly power() {
        Poly base = atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("exponent must be a nonnegative integer literal");
            unsigned long e = uint_literal("exponent must be an integer");
            if (pos_ < s_.size() && s_[pos_] == '/')
                fail("exponent must be a nonnegative integer literal");
            return pow_poly(base, e);
        }
        return base;
    }

    Poly atom() {
        skip_ws();
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return Poly(rational_literal());
        if (c == 'x') {
            ++pos_;
            return Poly::variable();
        }
        if (c == 'T') {
            ++pos_;
            expect('(');
            unsigned long n = uint_literal("T(n) needs an integer n >= 0");
            expect(')');
            return chebyshev(static_cast<long>(n));
        }
        if (c == '(') {
            ++pos_;
            Poly inner = composition();
            expect(')');
            return inner;
        }
        fail("expected a number, x, T(n) or '('");
    }

    Poly coeff_list() {
        expect('[');
        std::vector<Rational> cs;
        skip_ws();
        if (!eat(']')) {
            while (true) {
                skip_ws();
                bool neg = eat('-');
                Rational v = rational_literal();
                cs.push_back(neg ? Rational(-v) : v);
                skip_ws();
                if (eat(']')) break;
                expect(',');
            }
        }
        return Poly::from_coeffs(std::move(cs));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    std::vector<std::string> warnings_;
};

}  // namespace

ParsedPoly parse_poly_checked(const std::string& src) { return Parser(src).run(); }

Poly parse_poly(const std::string& src) { return Parser(src).run().value; }

}  // namespace pmp
