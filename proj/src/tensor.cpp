#include "rectwalg/tensor.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rectwalg {

Rational Laurent::at(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Rational(0) : it->second;
}

void Laurent::set(int exp, const Rational& c) {
    if (c.is_zero()) c_.erase(exp);
    else c_[exp] = c;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (const auto& [e, c] : b.c_) r.set(e, r.at(e) + c);
    return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_) r.set(ea + eb, r.at(ea + eb) + ca * cb);
    return r;
}

Laurent Laurent::scaled(const Rational& q) const {
    Laurent r;
    if (q.is_zero()) return r;
    for (const auto& [e, c] : c_) r.c_[e] = c * q;
    return r;
}

Laurent Laurent::shifted(int by) const {
    Laurent r;
    for (const auto& [e, c] : c_) r.c_[e + by] = c;
    return r;
}

TensorPoly TensorPoly::scalar(const Laurent& c) {
    TensorPoly t;
    t.add({}, c);
    return t;
}

TensorPoly TensorPoly::letter(int p, int q) {
    TensorPoly t;
    t.add({{p, q}}, Laurent(Rational(1)));
    return t;
}

void TensorPoly::add(const Word& w, const Laurent& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorPoly operator+(const TensorPoly& a, const TensorPoly& b) {
    TensorPoly r = a;
    for (const auto& [w, c] : b.terms_) r.add(w, c);
    return r;
}

TensorPoly operator*(const TensorPoly& a, const TensorPoly& b) {
    TensorPoly r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add(w, ca * cb);
        }
    return r;
}

TensorPoly TensorPoly::scaled(const Laurent& c) const {
    TensorPoly r;
    for (const auto& [w, lc] : terms_) r.add(w, lc * c);
    return r;
}

std::map<Word, Rational> TensorPoly::coeff(int exp) const {
    std::map<Word, Rational> out;
    for (const auto& [w, lc] : terms_) {
        Rational c = lc.at(exp);
        if (!c.is_zero()) out[w] = c;
    }
    return out;
}

std::string TensorPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, lc] : terms_) {
        if (!first) os << " + ";
        os << "(";
        bool f2 = true;
        for (const auto& [e, c] : lc.coeffs()) {
            if (!f2) os << " + ";
            os << c.str();
            if (e != 0) os << "*u^" << e;
            f2 = false;
        }
        os << ")";
        for (const auto& [p, q] : w) os << "*e[" << p << "," << q << "]";
        first = false;
    }
    return os.str();
}

namespace {

Rational rho_of(const SignData& sd, int q) {
    if (q == 0) return Rational(0);
    int e = sign_value(sd.eps);
    return q > 0 ? Rational(sd.n * q - e, 2) : Rational(sd.n * q + e, 2);
}

} // namespace

OmegaMatrix::OmegaMatrix(const SignData& sd, bool barred) : l_(sd.l) {
    if (barred && sd.l % 2 == 0)
        throw std::invalid_argument("OmegaMatrix: barred variant requires odd l");
    const Sign phi = sd.phi();
    auto cols = index_set(l_);
    entries_.resize(static_cast<size_t>(l_) * l_);
    for (int pi = 0; pi < l_; ++pi) {
        for (int qi = 0; qi < l_; ++qi) {
            int p = cols[pi], q = cols[qi];
            TensorPoly v;
            if (p < q) {
                v = TensorPoly::letter(p, q);
            } else if (p == q) {
                if (barred && p == 0) {
                    v = TensorPoly::letter(0, 0);
                } else {
                    Laurent u_part;
                    u_part.set(1, Rational(1));
                    u_part.set(0, rho_of(sd, q));
                    v = TensorPoly::scalar(u_part) + TensorPoly::letter(q, q);
                }
            } else if (p == q + 2) {
                Rational c = p < 0 ? Rational(-1)
                                   : (p == 0 ? Rational(-sign_value(phi)) : Rational(1));
                v = TensorPoly::scalar(Laurent(c));
            } // p > q + 2: zero
            entries_[static_cast<size_t>(pi) * l_ + qi] = v;
        }
    }
}

const TensorPoly& OmegaMatrix::at(int p, int q) const {
    int pi = (p - (1 - l_)) / 2, qi = (q - (1 - l_)) / 2;
    return entries_[static_cast<size_t>(pi) * l_ + qi];
}

TensorPoly rdet(const std::vector<std::vector<TensorPoly>>& m) {
    const size_t l = m.size();
    std::vector<size_t> perm(l);
    for (size_t i = 0; i < l; ++i) perm[i] = i;
    TensorPoly out;
    // run over permutations; sign tracked by inversion count
    do {
        int inv = 0;
        for (size_t i = 0; i < l; ++i)
            for (size_t j = i + 1; j < l; ++j)
                if (perm[i] > perm[j]) ++inv;
        TensorPoly prod = TensorPoly::scalar(Laurent(Rational(inv % 2 ? -1 : 1)));
        bool zero = false;
        for (size_t i = 0; i < l; ++i) {
            if (m[i][perm[i]].is_zero()) { zero = true; break; }
            prod = prod * m[i][perm[i]];
        }
        if (!zero) out = out + prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

TensorPoly OmegaMatrix::rdet() const {
    std::vector<std::vector<TensorPoly>> m(static_cast<size_t>(l_),
                                           std::vector<TensorPoly>(static_cast<size_t>(l_)));
    for (int i = 0; i < l_; ++i)
        for (int j = 0; j < l_; ++j) m[i][j] = entries_[static_cast<size_t>(i) * l_ + j];
    return rectwalg::rdet(m);
}

std::vector<TensorPoly> omega_coefficients(const SignData& sd, int R) {
    if (R < 1) throw std::invalid_argument("omega_coefficients: R must be >= 1");
    const int l = sd.l;
    const Sign phi = sd.phi();
    TensorPoly main = OmegaMatrix(sd, false).rdet();
    std::vector<TensorPoly> out(static_cast<size_t>(R));
    auto collapse = [](const std::map<Word, Rational>& ws) {
        TensorPoly t;
        for (const auto& [w, c] : ws) t.add(w, Laurent(c));
        return t;
    };
    for (int s = 1; s <= R; ++s) out[s - 1] = collapse(main.coeff(l - s));
    if (l % 2 != 0) {
        TensorPoly barred = OmegaMatrix(sd, true).rdet();
        // (-2 phi u)^{-r} = (-phi/2)^r u^{-r}
        Rational base = Rational(-sign_value(phi), 2);
        Rational power(1);
        for (int r = 1; r < R; ++r) {
            power *= base;
            for (int s = 1; s <= R; ++s) {
                // contribution of u^{-r} * barred to the u^{l-s} coefficient
                int need = l - s + r;
                if (need > l - 1) continue;
                for (const auto& [w, c] : barred.coeff(need))
                    out[s - 1].add(w, Laurent(c * power));
            }
        }
    }
    return out;
}

} // namespace rectwalg
