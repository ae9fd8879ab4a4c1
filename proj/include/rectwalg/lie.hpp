#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rectwalg/rational.hpp"

namespace rectwalg {

enum class Sign : int { plus = +1, minus = -1 };

inline int sign_value(Sign s) { return static_cast<int>(s); }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// hat(i): 0 for i >= 0, 1 for i < 0.
inline int hat(int i) { return i < 0 ? 1 : 0; }

/// eps^k for k in Z/2.
inline Rational sign_pow(Sign eps, int k) {
    return (k % 2 != 0 && eps == Sign::minus) ? Rational(-1) : Rational(1);
}

/// The index set I_n = {1-n, 3-n, ..., n-1}.
std::vector<int> index_set(int n);

/// Parameters (eps, n, l) with the companion sign phi.  phi = eps for l odd,
/// -eps for l even; a valid parameter set must give phi = + when n is odd,
/// and rectangular nilpotents of type (l^n) must exist:
///   eps = + and l even  => n even
///   eps = - and l odd   => n even
struct SignData {
    Sign eps;
    int n;
    int l;

    Sign phi() const { return l % 2 != 0 ? eps : (eps == Sign::plus ? Sign::minus : Sign::plus); }
    /// Empty if valid, otherwise the violated constraint.
    std::optional<std::string> violation() const;
    static SignData make(Sign eps, int n, int l); // throws std::invalid_argument when invalid
};

/// The n x l array of boxes labeled by I_{nl} with row(-a) = -row(a),
/// col(-a) = -col(a), and for eps = - the positivity convention
/// (a > 0 iff col(a) > 0, or col(a) = 0 and row(a) > 0).
///
/// Labelings: `column_major` fills columns left to right, each top to
/// bottom, with 1-nl, 3-nl, ...; `column_major_reversed` fills each column
/// bottom to top.  Both satisfy the constraints (the reversed one only for
/// even l), and results must not depend on the choice.
class Pyramid {
public:
    enum class Labeling { column_major, column_major_reversed };

    Pyramid(SignData sd, Labeling lab = Labeling::column_major);

    const SignData& signdata() const { return sd_; }
    Labeling labeling() const { return labeling_; }
    int n() const { return sd_.n; }
    int l() const { return sd_.l; }
    int dim() const { return sd_.n * sd_.l; }

    int row_of(int label) const;
    int col_of(int label) const;
    int box(int row, int col) const; // label at (row, col)

    const std::vector<int>& labels() const { return labels_; } // I_{nl} ascending

    std::string grid_str() const;

private:
    SignData sd_;
    Labeling labeling_;
    std::vector<int> labels_;
    std::map<int, std::pair<int, int>> pos_;          // label -> (row, col)
    std::map<std::pair<int, int>, int> label_at_;     // (row, col) -> label
};

/// Element of gl_{nl} as a finitely supported combination of matrix units
/// e_{a,b}, a,b in I_{nl}, with rational coefficients.
class LieElement {
public:
    using Terms = std::map<std::pair<int, int>, Rational>;

    LieElement() = default;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_unit(int a, int b, const Rational& c);
    Rational coeff(int a, int b) const;

    friend LieElement operator+(const LieElement& x, const LieElement& y);
    friend LieElement operator-(const LieElement& x, const LieElement& y);
    LieElement scaled(const Rational& q) const;
    friend bool operator==(const LieElement& x, const LieElement& y) {
        return x.terms_ == y.terms_;
    }

    /// Matrix product (in gl_{nl}).
    friend LieElement mul(const LieElement& x, const LieElement& y);
    friend LieElement bracket(const LieElement& x, const LieElement& y);

    std::string str() const; // "q*E[a,b] + ..." debug form

private:
    Terms terms_;
};

LieElement mul(const LieElement& x, const LieElement& y);
LieElement bracket(const LieElement& x, const LieElement& y);

/// Dense square rational matrix indexed by I_m for small exact checks.
class RatMatrix {
public:
    explicit RatMatrix(int m) : m_(m), data_(static_cast<size_t>(m) * m) {}
    int size() const { return m_; }

    Rational& at(int i, int j) { return data_[idx(i, j)]; }
    const Rational& at(int i, int j) const { return data_[idx(i, j)]; }

    static RatMatrix identity(int m);
    static RatMatrix from_lie(const LieElement& x, int m); // indices in I_m
    LieElement to_lie() const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.m_ == b.m_ && a.data_ == b.data_;
    }
    RatMatrix transposed() const;
    Rational det() const;   // fraction-free elimination
    int rank() const;

private:
    size_t idx(int i, int j) const;
    int m_;
    std::vector<Rational> data_;
};

/// f_{i,j} = e_{i,j} - eps^{hat(i)+hat(j)} e_{-j,-i} inside gl_m, indices in I_m.
LieElement f_element(int m, int i, int j, Sign eps);

/// The J_m^{eps} form matrix: entry (i,j) = delta_{i,-j} for eps=+, and
/// delta_{i,-j} * sgn(j) for eps=-.
RatMatrix form_matrix(int m, Sign eps);

/// The rectangular nilpotent e of Jordan type (l^n).
LieElement nilpotent_e(const Pyramid& pyr);

/// The semisimple element h = sum_a col(-a) e_{a,a} of the sl2-triple.
LieElement cartan_h(const Pyramid& pyr);

/// Common degree of all terms under deg(e_{a,b}) = col(b) - col(a), or
/// nullopt for a mixed (or zero) element.
std::optional<int> degree(const LieElement& x, const Pyramid& pyr);

/// chi(x) = (x, e) = tr(x * e) / 2.  Requires every term of x to have
/// negative degree (x in m); throws std::domain_error otherwise.
Rational chi_character(const LieElement& x, const Pyramid& pyr);

enum class Subalgebra { g, m, p, h0 };

/// Index pair (a,b) of one basis element f_{a,b}, in the fixed basis order.
struct BasisPair {
    int a;
    int b;
};

/// Basis of g = g^{eps}_{nl} by admissible pairs (a+b < 0 for eps=+,
/// a+b <= 0 for eps=-), restricted by degree sign for m / p / h0.
std::vector<BasisPair> subalgebra_pairs(const Pyramid& pyr, Subalgebra which);
std::vector<LieElement> subalgebra_basis(const Pyramid& pyr, Subalgebra which);

/// Decomposition of x in the admissible-pair basis of g; throws
/// std::domain_error if x is not in the span.
std::map<std::pair<int, int>, Rational> decompose_in_basis(const LieElement& x,
                                                           const Pyramid& pyr);

/// Generator of the component group: valid for (eps=-, n even, l even) and
/// for (eps=+, n even, l odd); throws std::domain_error otherwise (the
/// group is trivial in all remaining rectangular cases).
RatMatrix component_generator(const Pyramid& pyr);

} // namespace rectwalg
