#pragma once

#include <map>
#include <string>
#include <vector>

#include "rectwalg/lie.hpp"
#include "rectwalg/rational.hpp"

namespace rectwalg {

/// Laurent polynomial in u with rational coefficients.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(const Rational& c) { set(0, c); }

    const std::map<int, Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    Rational at(int exp) const;
    void set(int exp, const Rational& c);

    friend Laurent operator+(const Laurent& a, const Laurent& b);
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent scaled(const Rational& q) const;
    Laurent shifted(int by) const; // multiply by u^by
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.c_ == b.c_; }

private:
    std::map<int, Rational> c_;
};

/// Letter e_{p,q} of the tensor algebra T(gl_l), p,q in I_l.
using Letter = std::pair<int, int>;
using Word = std::vector<Letter>;

/// Element of T(gl_l)[u, u^{-1}]: free words in the letters with Laurent
/// coefficients.  No straightening happens here.
class TensorPoly {
public:
    TensorPoly() = default;

    static TensorPoly scalar(const Laurent& c);
    static TensorPoly letter(int p, int q);

    const std::map<Word, Laurent>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Word& w, const Laurent& c);

    friend TensorPoly operator+(const TensorPoly& a, const TensorPoly& b);
    friend TensorPoly operator*(const TensorPoly& a, const TensorPoly& b); // word concatenation
    TensorPoly scaled(const Laurent& c) const;
    friend bool operator==(const TensorPoly& a, const TensorPoly& b) {
        return a.terms_ == b.terms_;
    }

    /// u^exp coefficient as a plain word -> rational map.
    std::map<Word, Rational> coeff(int exp) const;

    std::string str() const;

private:
    std::map<Word, Laurent> terms_;
};

TensorPoly operator+(const TensorPoly& a, const TensorPoly& b);
TensorPoly operator*(const TensorPoly& a, const TensorPoly& b);

/// The l x l matrix Omega(u) (or the barred variant replacing the middle
/// entry u_0 by e_{0,0}; only defined for odd l).  Rows and columns are
/// indexed by I_l.  Entries use u_q = u + e_{q,q} + rho_q with rho built
/// from the eps consistent with (l, phi).
class OmegaMatrix {
public:
    OmegaMatrix(const SignData& sd, bool barred);
    const TensorPoly& at(int p, int q) const;
    int l() const { return l_; }

    /// Row-ordered determinant: Laplace expansion with each monomial's
    /// factors kept in ascending row order.
    TensorPoly rdet() const;

private:
    int l_;
    std::vector<TensorPoly> entries_;
};

TensorPoly rdet(const std::vector<std::vector<TensorPoly>>& m);

/// omega_1 .. omega_R: coefficients in omega(u) = sum_{r} omega_{l-r} u^r,
/// where omega(u) = rdet Omega(u) for even l and has the geometric
/// (-2 phi u)^{-r} rdet OmegaBar(u) tail for odd l.  Each entry has all its
/// Laurent weight at u^0.
std::vector<TensorPoly> omega_coefficients(const SignData& sd, int R);

} // namespace rectwalg
