#pragma once

#include <map>
#include <optional>
#include <string>

#include "rectwalg/rational.hpp"

namespace rectwalg {

/// Exact scalar of the form q0 + sum_k q_k * s_k with q's rational and s_k
/// formal symbols.  The symbols model a choice of coset representatives of
/// Q inside C, which makes the integer-difference partial order decidable:
/// a >= b holds iff a and b have the same symbolic part and their rational
/// offsets differ by a non-negative integer.
class Number {
public:
    Number() = default;
    Number(const Rational& offset) : offset_(offset) {}
    Number(long long n) : offset_(Rational(n)) {}
    Number(const Rational& offset, std::map<std::string, Rational> irr)
        : offset_(offset), irr_(std::move(irr)) { normalize(); }

    static Number symbol(const std::string& name, const Rational& coeff = Rational(1)) {
        Number v;
        v.irr_[name] = coeff;
        v.normalize();
        return v;
    }

    const Rational& offset() const { return offset_; }
    const std::map<std::string, Rational>& irr() const { return irr_; }
    bool is_rational() const { return irr_.empty(); }
    bool is_zero() const { return offset_.is_zero() && irr_.empty(); }

    Number operator-() const;
    friend Number operator+(const Number& a, const Number& b);
    friend Number operator-(const Number& a, const Number& b);
    Number scaled(const Rational& q) const;

    friend bool operator==(const Number& a, const Number& b) {
        return a.offset_ == b.offset_ && a.irr_ == b.irr_;
    }
    friend bool operator!=(const Number& a, const Number& b) { return !(a == b); }

    /// Canonical total order used only for sorting and map keys, never for
    /// the order-theoretic semantics: symbolic part lexicographic, then offset.
    friend bool operator<(const Number& a, const Number& b);

    std::string str() const;
    static Number parse(const std::string& text);

private:
    void normalize() {
        for (auto it = irr_.begin(); it != irr_.end();) {
            if (it->second.is_zero()) it = irr_.erase(it); else ++it;
        }
    }

    Rational offset_;
    std::map<std::string, Rational> irr_;
};

/// a >= b in the partial order: a - b in Z_{>=0}.
bool ge(const Number& a, const Number& b);

/// a > b: a - b in Z_{>0}.
bool gt(const Number& a, const Number& b);

/// a + b in Z_{>=0} (Z_{>0} when strict).
bool sum_nonneg_int(const Number& a, const Number& b, bool strict = false);

/// Key identifying the Z-coset of a Number; two Numbers are comparable
/// under ge exactly when their coset keys agree.
struct CosetKey {
    std::map<std::string, Rational> irr;
    Rational frac;
    friend bool operator==(const CosetKey&, const CosetKey&) = default;
    friend bool operator<(const CosetKey& a, const CosetKey& b) {
        if (a.irr != b.irr) return a.irr < b.irr;
        return a.frac < b.frac;
    }
    CosetKey negated() const;
};

CosetKey coset_of(const Number& a);

} // namespace rectwalg
