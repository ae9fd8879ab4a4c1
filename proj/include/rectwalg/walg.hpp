#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rectwalg/pbw.hpp"
#include "rectwalg/tensor.hpp"

namespace rectwalg {

/// One verification outcome, keyed by check name and the (i, j, r) it
/// concerns; `witness` carries the offending term on failure.
struct CheckRecord {
    std::string check;
    int n = 0;
    int l = 0;
    char eps = '+';
    std::optional<int> i, j, r;
    bool pass = true;
    std::string witness;
};

/// n x n matrix of series sum_{r=0..R} x_r u^{-r} with x_r in U(h).
class SeriesMatrix {
public:
    SeriesMatrix(int n, int R, std::shared_ptr<const Presentation> pres);

    int n() const { return n_; }
    int order() const { return R_; }

    PbwElement& at(int i, int j, int r);             // i, j in I_n
    const PbwElement& at(int i, int j, int r) const;

    friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);

private:
    int n_, R_;
    std::shared_ptr<const Presentation> pres_;
    std::vector<PbwElement> data_;
};

/// s_{i,j} applied to an element of T(gl_l)[u,u^{-1}]: the result is a map
/// u-exponent -> element of U(g), extended from the generator rule over
/// words by the matrix-coefficient rule.
std::map<int, PbwElement> s_apply(int i, int j, const TensorPoly& x,
                                  const std::shared_ptr<const Presentation>& pres);

/// Shared state for the verification checks on one pyramid.
struct VerifyContext {
    Pyramid pyr;
    std::shared_ptr<const Presentation> pres;
    int R;
    std::vector<TensorPoly> omegas;          // omega_1 .. omega_R
    std::vector<int> m_ids;                  // m-generator ids
    std::optional<SeriesMatrix> kappa;       // kappa_l(S(u)) truncated at R

    static VerifyContext make(const Pyramid& pyr, int R);
};

/// s_{i,j}(omega_r) as an element of U(p).
PbwElement walg_generator(const VerifyContext& ctx, int i, int j, int r);

/// Membership in U(g,e): pr([m, x]) = 0 for every m-basis element.
bool is_in_walg(const VerifyContext& ctx, const PbwElement& x, std::string* witness = nullptr);

/// kappa_l(S(u)) as the ordered product of evaluation matrices.
SeriesMatrix kappa_series_matrix(const Pyramid& pyr, int R,
                                 const std::shared_ptr<const Presentation>& pres);

/// The verification suites.  Records come back in a fixed (i, j, r) order
/// whatever the worker count; jobs <= 1 runs inline.
std::vector<CheckRecord> check_membership(const VerifyContext& ctx, int jobs = 1);
std::vector<CheckRecord> check_gens_identity(const VerifyContext& ctx, int jobs = 1);
std::vector<CheckRecord> check_kernel(const VerifyContext& ctx, int jobs = 1);
std::vector<CheckRecord> check_symmetry_relation(const VerifyContext& ctx, int jobs = 1);

/// Quadratic twisted-Yangian relation on kappa images at one (i,j,k,h)
/// tuple, coefficientwise for u,v exponents up to `order`.
std::vector<CheckRecord> check_quadratic_relation(const VerifyContext& ctx, int i, int j, int k,
                                                  int h, int order);

} // namespace rectwalg
