#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rectwalg/lie.hpp"
#include "rectwalg/rational.hpp"

namespace rectwalg {

/// Finite-dimensional Lie algebra presentation over an ordered abstract
/// basis, plus the data needed for the projection pr and the Miura maps:
/// per-generator grading degree, chi values on the m-part and rho-shifts
/// on the Cartan part.
///
/// Generator order: all p-generators (degree >= 0) before all
/// m-generators (degree < 0), each block ascending by
/// (degree, row(a), col(a), row(b), col(b)).  PBW normal form sorts
/// monomials non-decreasingly in this order, which makes pr a plain
/// truncate-and-substitute.
class Presentation {
public:
    struct Gen {
        int a, b;          // admissible pair of f_{a,b}
        int degree;        // col(b) - col(a)
        Rational chi;      // chi(f_{a,b}), meaningful for degree < 0
        Rational rho;      // rho_{col(a)} for diagonal a == b, else 0
        std::string name;
    };

    static std::shared_ptr<const Presentation> for_pyramid(const Pyramid& pyr);

    int size() const { return static_cast<int>(gens_.size()); }
    const Gen& gen(int id) const { return gens_[static_cast<size_t>(id)]; }
    int first_m() const { return first_m_; } // ids >= first_m are m-generators
    const Pyramid& pyramid() const { return pyr_; }

    /// [g_i, g_j] as a linear combination of generators.
    const std::vector<std::pair<int, Rational>>& bracket(int i, int j) const;

    int id_of_pair(int a, int b) const; // -1 if (a,b) is not a basis pair

private:
    explicit Presentation(const Pyramid& pyr);
    void check_jacobi() const;

    Pyramid pyr_;
    std::vector<Gen> gens_;
    int first_m_ = 0;
    std::map<std::pair<int, int>, int> pair_to_id_;
    // brackets_[i * size + j] for all i, j
    std::vector<std::vector<std::pair<int, Rational>>> brackets_;
};

using Mono = std::vector<int16_t>; // non-decreasing generator ids

/// Element of U(g) in PBW normal form: a rational combination of sorted
/// monomials in the presentation's generators.
class PbwElement {
public:
    PbwElement() = default;
    explicit PbwElement(std::shared_ptr<const Presentation> pres) : pres_(std::move(pres)) {}

    static PbwElement scalar(std::shared_ptr<const Presentation> pres, const Rational& c);
    static PbwElement generator(std::shared_ptr<const Presentation> pres, int id);

    const std::map<Mono, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const std::shared_ptr<const Presentation>& presentation() const { return pres_; }

    void add_term(const Mono& m, const Rational& c);

    friend PbwElement operator+(const PbwElement& x, const PbwElement& y);
    friend PbwElement operator-(const PbwElement& x, const PbwElement& y);
    friend PbwElement operator*(const PbwElement& x, const PbwElement& y);
    PbwElement scaled(const Rational& q) const;
    friend bool operator==(const PbwElement& x, const PbwElement& y) {
        return x.terms_ == y.terms_;
    }

    std::string str() const;

private:
    std::shared_ptr<const Presentation> pres_;
    std::map<Mono, Rational> terms_;
};

PbwElement commutator(const PbwElement& x, const PbwElement& y);

/// Decompose a LieElement in the basis and return it as a degree-1 element.
PbwElement embed(const LieElement& x, const std::shared_ptr<const Presentation>& pres);

/// Projection U(g) -> U(p) along U(g) = U(p) (+) I: rewrite in PBW order
/// (p first, m last) and replace each trailing m-factor by its chi value.
PbwElement pr_project(const PbwElement& x);

/// Algebra map U(p) -> U(h) killing every positive-degree generator.
/// Throws std::domain_error if x has an m-factor.
PbwElement xi_project(const PbwElement& x);

/// The automorphism of U(h) with f_{a,a} -> f_{a,a} - rho_{col(a)}.
PbwElement eta_shift(const PbwElement& x);

/// Miura transform mu = eta . xi : U(p) -> U(h).
PbwElement miura(const PbwElement& x);

} // namespace rectwalg
