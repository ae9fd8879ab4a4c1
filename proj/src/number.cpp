#include "rectwalg/number.hpp"

#include <cctype>
#include <stdexcept>

namespace rectwalg {

Number Number::operator-() const {
    Number r;
    r.offset_ = -offset_;
    for (const auto& [s, q] : irr_) r.irr_[s] = -q;
    return r;
}

Number operator+(const Number& a, const Number& b) {
    Number r = a;
    r.offset_ += b.offset_;
    for (const auto& [s, q] : b.irr_) r.irr_[s] += q;
    r.normalize();
    return r;
}

Number operator-(const Number& a, const Number& b) { return a + (-b); }

Number Number::scaled(const Rational& q) const {
    Number r;
    r.offset_ = offset_ * q;
    for (const auto& [s, c] : irr_) r.irr_[s] = c * q;
    r.normalize();
    return r;
}

bool operator<(const Number& a, const Number& b) {
    if (a.irr_ != b.irr_) return a.irr_ < b.irr_;
    return a.offset_ < b.offset_;
}

bool ge(const Number& a, const Number& b) {
    if (a.irr() != b.irr()) return false;
    Rational d = a.offset() - b.offset();
    return d.is_integer() && d.num() >= 0;
}

bool gt(const Number& a, const Number& b) {
    if (a.irr() != b.irr()) return false;
    Rational d = a.offset() - b.offset();
    return d.is_integer() && d.num() > 0;
}

bool sum_nonneg_int(const Number& a, const Number& b, bool strict) {
    Number s = a + b;
    if (!s.is_rational()) return false;
    if (!s.offset().is_integer()) return false;
    return strict ? s.offset().num() > 0 : s.offset().num() >= 0;
}

CosetKey CosetKey::negated() const {
    CosetKey k;
    for (const auto& [s, q] : irr) k.irr[s] = -q;
    k.frac = (-frac).frac();
    return k;
}

CosetKey coset_of(const Number& a) {
    return CosetKey{a.irr(), a.offset().frac()};
}

// ---------------------------------------------------------------------------
// Textual form.  Grammar:
//   number := ['-'] term (('+'|'-') term)*
//   term   := rat | rat '*' sym | sym
//   rat    := int ['/' int]
//   sym    := [a-z][a-z0-9]*
// Examples: "3/2", "s", "s+1/2", "-2*s+1".

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;
    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    void expect_more(const char* what) {
        if (done()) throw std::invalid_argument(std::string("Number: expected ") + what);
    }
};

long long parse_int(Cursor& c) {
    c.expect_more("digit");
    if (!std::isdigit(static_cast<unsigned char>(c.peek())))
        throw std::invalid_argument("Number: expected digit at '" + c.s.substr(c.pos) + "'");
    long long v = 0;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        v = v * 10 + (c.peek() - '0');
        if (v < 0) throw std::overflow_error("Number: integer literal overflow");
        ++c.pos;
    }
    return v;
}

Rational parse_rat(Cursor& c) {
    long long n = parse_int(c);
    if (!c.done() && c.peek() == '/') {
        ++c.pos;
        long long d = parse_int(c);
        return Rational(n, d);
    }
    return Rational(n);
}

std::string parse_sym(Cursor& c) {
    c.expect_more("symbol");
    if (!std::islower(static_cast<unsigned char>(c.peek())))
        throw std::invalid_argument("Number: expected symbol at '" + c.s.substr(c.pos) + "'");
    std::string name;
    while (!c.done() && (std::islower(static_cast<unsigned char>(c.peek())) ||
                         std::isdigit(static_cast<unsigned char>(c.peek())))) {
        name += c.peek();
        ++c.pos;
    }
    return name;
}

} // namespace

Number Number::parse(const std::string& text) {
    Cursor c{text};
    Number result;
    bool first = true;
    while (true) {
        Rational sign(1);
        if (first) {
            if (!c.done() && c.peek() == '-') { sign = Rational(-1); ++c.pos; }
        } else {
            if (c.done()) break;
            if (c.peek() == '+') { ++c.pos; }
            else if (c.peek() == '-') { sign = Rational(-1); ++c.pos; }
            else throw std::invalid_argument("Number: unexpected '" + c.s.substr(c.pos) + "'");
        }
        c.expect_more("term");
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            Rational q = parse_rat(c);
            if (!c.done() && c.peek() == '*') {
                ++c.pos;
                result = result + Number::symbol(parse_sym(c), q * sign);
            } else {
                result = result + Number(q * sign);
            }
        } else {
            result = result + Number::symbol(parse_sym(c), sign);
        }
        first = false;
        if (c.done()) break;
    }
    if (first) throw std::invalid_argument("Number: empty input");
    return result;
}

std::string Number::str() const {
    if (irr_.empty()) return offset_.str();
    std::string out;
    bool first = true;
    for (const auto& [s, q] : irr_) {
        if (q.num() < 0) {
            out += "-";
        } else if (!first) {
            out += "+";
        }
        Rational mag = q.num() < 0 ? -q : q;
        if (mag != Rational(1)) out += mag.str() + "*";
        out += s;
        first = false;
    }
    if (!offset_.is_zero()) {
        if (offset_.num() > 0) out += "+";
        out += offset_.str();
    }
    return out;
}

} // namespace rectwalg
