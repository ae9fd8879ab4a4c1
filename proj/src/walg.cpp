#include "rectwalg/walg.hpp"

#include <functional>
#include <stdexcept>

#include "rectwalg/parallel.hpp"

namespace rectwalg {

SeriesMatrix::SeriesMatrix(int n, int R, std::shared_ptr<const Presentation> pres)
    : n_(n), R_(R), pres_(std::move(pres)),
      data_(static_cast<size_t>(n) * n * (R + 1), PbwElement(pres_)) {}

PbwElement& SeriesMatrix::at(int i, int j, int r) {
    int oi = (i - (1 - n_)) / 2, oj = (j - (1 - n_)) / 2;
    if (oi < 0 || oi >= n_ || oj < 0 || oj >= n_ || r < 0 || r > R_)
        throw std::out_of_range("SeriesMatrix: index");
    return data_[(static_cast<size_t>(oi) * n_ + oj) * (R_ + 1) + r];
}

const PbwElement& SeriesMatrix::at(int i, int j, int r) const {
    return const_cast<SeriesMatrix*>(this)->at(i, j, r);
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
    if (a.n_ != b.n_ || a.R_ != b.R_) throw std::invalid_argument("SeriesMatrix: shape mismatch");
    SeriesMatrix c(a.n_, a.R_, a.pres_);
    auto idxs = index_set(a.n_);
    for (int i : idxs)
        for (int j : idxs)
            for (int k : idxs)
                for (int r = 0; r <= a.R_; ++r)
                    for (int s = 0; s <= r; ++s) {
                        const PbwElement& x = a.at(i, k, s);
                        const PbwElement& y = b.at(k, j, r - s);
                        if (x.is_zero() || y.is_zero()) continue;
                        c.at(i, j, r) = c.at(i, j, r) + x * y;
                    }
    return c;
}

namespace {

/// Single-letter image: s_{i,j}(e_{p,q}) = phi^{hat(i)hat(p)+hat(j)hat(q)} f_{a,b}
PbwElement s_letter(int i, int j, int p, int q, const std::shared_ptr<const Presentation>& pres) {
    const Pyramid& pyr = pres->pyramid();
    const Sign phi = pyr.signdata().phi();
    int a = pyr.box(i, p);
    int b = pyr.box(j, q);
    Rational sgn = sign_pow(phi, hat(i) * hat(p) + hat(j) * hat(q));
    LieElement f = f_element(pyr.dim(), a, b, pyr.signdata().eps);
    return embed(f, pres).scaled(sgn);
}

} // namespace

std::map<int, PbwElement> s_apply(int i, int j, const TensorPoly& x,
                                  const std::shared_ptr<const Presentation>& pres) {
    const int n = pres->pyramid().n();
    auto rows = index_set(n);
    std::map<int, PbwElement> out;
    for (const auto& [word, lc] : x.terms()) {
        // propagate over intermediate indices: s_{i,j}(l_1...l_m) =
        // sum_k s_{i,k_1}(l_1) s_{k_1,k_2}(l_2) ... s_{k_{m-1},j}(l_m)
        std::map<int, PbwElement> vec;
        vec.emplace(i, PbwElement::scalar(pres, Rational(1)));
        for (const auto& [p, q] : word) {
            std::map<int, PbwElement> next;
            for (const auto& [k, acc] : vec) {
                for (int k2 : rows) {
                    PbwElement step = s_letter(k, k2, p, q, pres);
                    if (step.is_zero()) continue;
                    PbwElement prod = acc * step;
                    if (prod.is_zero()) continue;
                    auto it = next.find(k2);
                    if (it == next.end()) next.emplace(k2, prod);
                    else it->second = it->second + prod;
                }
            }
            vec = std::move(next);
        }
        PbwElement val(pres);
        auto it = vec.find(j);
        if (it != vec.end()) val = it->second;
        else if (!word.empty()) continue;
        if (word.empty() && i != j) continue; // s_{i,j}(1) = delta_{i,j}
        for (const auto& [exp, c] : lc.coeffs()) {
            if (val.is_zero()) continue;
            auto jt = out.find(exp);
            if (jt == out.end()) out.emplace(exp, val.scaled(c));
            else jt->second = jt->second + val.scaled(c);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

VerifyContext VerifyContext::make(const Pyramid& pyr, int R) {
    VerifyContext ctx{pyr, Presentation::for_pyramid(pyr), R, {}, {}, std::nullopt};
    ctx.omegas = omega_coefficients(pyr.signdata(), R);
    for (int id = ctx.pres->first_m(); id < ctx.pres->size(); ++id) ctx.m_ids.push_back(id);
    ctx.kappa = kappa_series_matrix(pyr, R, ctx.pres);
    return ctx;
}

PbwElement walg_generator(const VerifyContext& ctx, int i, int j, int r) {
    if (r < 1 || r > ctx.R) throw std::out_of_range("walg_generator: r out of range");
    auto series = s_apply(i, j, ctx.omegas[static_cast<size_t>(r - 1)], ctx.pres);
    PbwElement out(ctx.pres);
    for (const auto& [exp, val] : series) {
        if (exp != 0) throw std::logic_error("walg_generator: omega coefficient carries u");
        out = out + val;
    }
    for (const auto& [mono, c] : out.terms())
        for (int16_t id : mono)
            if (id >= ctx.pres->first_m())
                throw std::logic_error("walg_generator: image not in U(p)");
    return out;
}

bool is_in_walg(const VerifyContext& ctx, const PbwElement& x, std::string* witness) {
    for (int id : ctx.m_ids) {
        PbwElement br = commutator(PbwElement::generator(ctx.pres, id), x);
        PbwElement image = pr_project(br);
        if (!image.is_zero()) {
            if (witness)
                *witness = "pr([" + ctx.pres->gen(id).name + ", .]) = " + image.str();
            return false;
        }
    }
    return true;
}

namespace {

SeriesMatrix eval_matrix(const Pyramid& pyr, int p, int R,
                         const std::shared_ptr<const Presentation>& pres) {
    SeriesMatrix E(pyr.n(), R, pres);
    for (int k : index_set(pyr.n()))
        for (int j : index_set(pyr.n())) {
            if (k == j) E.at(k, j, 0) = PbwElement::scalar(pres, Rational(1));
            if (R >= 1) {
                LieElement f = f_element(pyr.dim(), pyr.box(k, p), pyr.box(j, p),
                                         pyr.signdata().eps);
                E.at(k, j, 1) = embed(f, pres);
            }
        }
    return E;
}

SeriesMatrix tau_eval_matrix(const Pyramid& pyr, int p, int R,
                             const std::shared_ptr<const Presentation>& pres) {
    const Sign phi = pyr.signdata().phi();
    SeriesMatrix E(pyr.n(), R, pres);
    for (int i : index_set(pyr.n()))
        for (int h : index_set(pyr.n())) {
            if (i == h) E.at(i, h, 0) = PbwElement::scalar(pres, Rational(1));
            if (R >= 1) {
                LieElement f = f_element(pyr.dim(), pyr.box(-h, p), pyr.box(-i, p),
                                         pyr.signdata().eps);
                E.at(i, h, 1) = embed(f, pres).scaled(-sign_pow(phi, hat(i) + hat(h)));
            }
        }
    return E;
}

// ev_0 image: delta_{ij} + (u + phi/2)^{-1} f_{a,b}, geometric expansion.
SeriesMatrix ev0_matrix(const Pyramid& pyr, int R,
                        const std::shared_ptr<const Presentation>& pres) {
    const Sign phi = pyr.signdata().phi();
    if (pyr.labeling() != Pyramid::Labeling::column_major)
        throw std::domain_error("kappa: ev_0 is only defined for the default labeling");
    SeriesMatrix Z(pyr.n(), R, pres);
    Rational base = Rational(-sign_value(phi), 2);
    for (int i : index_set(pyr.n()))
        for (int j : index_set(pyr.n())) {
            if (i == j) Z.at(i, j, 0) = PbwElement::scalar(pres, Rational(1));
            LieElement f = f_element(pyr.dim(), pyr.box(i, 0), pyr.box(j, 0),
                                     pyr.signdata().eps);
            PbwElement fe = embed(f, pres);
            Rational c(1);
            for (int r = 1; r <= R; ++r) {
                Z.at(i, j, r) = fe.scaled(c);
                c *= base;
            }
        }
    return Z;
}

} // namespace

SeriesMatrix kappa_series_matrix(const Pyramid& pyr, int R,
                                 const std::shared_ptr<const Presentation>& pres) {
    const int l = pyr.l();
    std::vector<int> cols;
    SeriesMatrix M(pyr.n(), R, pres);
    if (l % 2 != 0) {
        M = ev0_matrix(pyr, R, pres);
        for (int p = 2; p <= l - 1; p += 2) cols.push_back(p);
    } else {
        M = tau_eval_matrix(pyr, 1, R, pres) * eval_matrix(pyr, 1, R, pres);
        for (int p = 3; p <= l - 1; p += 2) cols.push_back(p);
    }
    for (int p : cols)
        M = tau_eval_matrix(pyr, p, R, pres) * (M * eval_matrix(pyr, p, R, pres));
    return M;
}

namespace {

CheckRecord record(const VerifyContext& ctx, const std::string& name) {
    CheckRecord rec;
    rec.check = name;
    rec.n = ctx.pyr.n();
    rec.l = ctx.pyr.l();
    rec.eps = sign_char(ctx.pyr.signdata().eps);
    return rec;
}

std::vector<std::pair<int, int>> index_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int i : index_set(n))
        for (int j : index_set(n)) out.emplace_back(i, j);
    return out;
}

std::vector<CheckRecord> over_pairs(
    const VerifyContext& ctx, int jobs,
    const std::function<std::vector<CheckRecord>(int, int)>& worker) {
    auto pairs = index_pairs(ctx.pyr.n());
    auto chunks = parallel_map<std::vector<CheckRecord>>(
        pairs.size(), jobs, [&](size_t k) { return worker(pairs[k].first, pairs[k].second); });
    std::vector<CheckRecord> out;
    for (auto& chunk : chunks)
        for (auto& rec : chunk) out.push_back(std::move(rec));
    return out;
}

} // namespace

std::vector<CheckRecord> check_membership(const VerifyContext& ctx, int jobs) {
    return over_pairs(ctx, jobs, [&](int i, int j) {
        std::vector<CheckRecord> out;
        for (int r = 1; r <= ctx.R; ++r) {
            CheckRecord rec = record(ctx, "membership");
            rec.i = i; rec.j = j; rec.r = r;
            std::string witness;
            rec.pass = is_in_walg(ctx, walg_generator(ctx, i, j, r), &witness);
            rec.witness = witness;
            out.push_back(std::move(rec));
        }
        return out;
    });
}

std::vector<CheckRecord> check_gens_identity(const VerifyContext& ctx, int jobs) {
    return over_pairs(ctx, jobs, [&](int i, int j) {
        std::vector<CheckRecord> out;
        for (int r = 1; r <= ctx.R; ++r) {
            CheckRecord rec = record(ctx, "gens_identity");
            rec.i = i; rec.j = j; rec.r = r;
            PbwElement lhs = miura(walg_generator(ctx, i, j, r));
            PbwElement diff = lhs - ctx.kappa->at(i, j, r);
            rec.pass = diff.is_zero();
            if (!rec.pass) rec.witness = "mu(s) - kappa = " + diff.str();
            out.push_back(std::move(rec));
        }
        return out;
    });
}

std::vector<CheckRecord> check_kernel(const VerifyContext& ctx, int jobs) {
    const int l = ctx.pyr.l();
    if (ctx.R <= l) throw std::invalid_argument("check_kernel: needs R > l");
    const Sign phi = ctx.pyr.signdata().phi();
    return over_pairs(ctx, jobs, [&](int i, int j) {
        std::vector<CheckRecord> out;
        for (int r = l + 1; r <= ctx.R; ++r) {
            CheckRecord rec = record(ctx, "kernel");
            rec.i = i; rec.j = j; rec.r = r;
            PbwElement v = ctx.kappa->at(i, j, r);
            if (l % 2 != 0)
                v = v + ctx.kappa->at(i, j, r - 1).scaled(Rational(sign_value(phi), 2));
            rec.pass = v.is_zero();
            if (!rec.pass) rec.witness = v.str();
            out.push_back(std::move(rec));
        }
        return out;
    });
}

std::vector<CheckRecord> check_symmetry_relation(const VerifyContext& ctx, int jobs) {
    const Sign phi = ctx.pyr.signdata().phi();
    return over_pairs(ctx, jobs, [&](int i, int j) {
        CheckRecord rec = record(ctx, "symmetry");
        rec.i = i; rec.j = j;
        for (int s = 0; s <= ctx.R; ++s) {
            // phi^{hat i + hat j} S_{-j,-i}(-u) = S_{i,j}(u)
            //   + phi (S_{i,j}(u) - S_{i,j}(-u)) / (2u), coefficient of u^{-s}
            PbwElement lhs = ctx.kappa->at(-j, -i, s)
                                 .scaled(sign_pow(phi, hat(i) + hat(j)) *
                                         Rational(s % 2 ? -1 : 1));
            PbwElement rhs = ctx.kappa->at(i, j, s);
            if (s >= 1 && (s - 1) % 2 != 0)
                rhs = rhs + ctx.kappa->at(i, j, s - 1).scaled(Rational(sign_value(phi)));
            PbwElement diff = lhs - rhs;
            if (!diff.is_zero()) {
                rec.pass = false;
                rec.r = s;
                rec.witness = diff.str();
                break;
            }
        }
        return std::vector<CheckRecord>{rec};
    });
}

namespace {

// Coefficient maps of two-variable series sum c_{r,s} u^{-r} v^{-s}.
using Series2 = std::map<std::pair<int, int>, PbwElement>;

void add2(Series2& acc, int r, int s, const PbwElement& x) {
    if (x.is_zero()) return;
    auto it = acc.find({r, s});
    if (it == acc.end()) acc.emplace(std::make_pair(r, s), x);
    else it->second = it->second + x;
}

// product S_{ab}(first var) * S_{cd}(second var), as PBW products in order
Series2 prod2(const VerifyContext& ctx, int a, int b, int c, int d, bool swap_vars) {
    Series2 out;
    for (int r = 0; r <= ctx.R; ++r)
        for (int s = 0; s <= ctx.R; ++s) {
            const PbwElement& x = ctx.kappa->at(a, b, r);
            const PbwElement& y = ctx.kappa->at(c, d, s);
            if (x.is_zero() || y.is_zero()) continue;
            if (!swap_vars) add2(out, r, s, x * y);
            else add2(out, s, r, x * y); // first factor depends on v, second on u
        }
    return out;
}

Series2 scale2(const Series2& x, const Rational& q) {
    Series2 out;
    for (const auto& [k, v] : x) {
        PbwElement s = v.scaled(q);
        if (!s.is_zero()) out.emplace(k, s);
    }
    return out;
}

Series2 add_series(const Series2& x, const Series2& y, const Rational& qy = Rational(1)) {
    Series2 out = x;
    for (const auto& [k, v] : y) add2(out, k.first, k.second, v.scaled(qy));
    return out;
}

PbwElement at2(const Series2& x, int r, int s, const VerifyContext& ctx) {
    auto it = x.find({r, s});
    return it == x.end() ? PbwElement(ctx.pres) : it->second;
}

} // namespace

std::vector<CheckRecord> check_quadratic_relation(const VerifyContext& ctx, int i, int j, int k,
                                                  int h, int order) {
    if (order + 2 > ctx.R)
        throw std::invalid_argument("check_quadratic_relation: needs R >= order + 2");
    const Sign phi = ctx.pyr.signdata().phi();
    // commutator [S_{ij}(u), S_{kh}(v)]
    Series2 comm = add_series(prod2(ctx, i, j, k, h, false),
                              scale2(prod2(ctx, k, h, i, j, true), Rational(-1)));
    // RHS pieces
    Series2 t1 = add_series(prod2(ctx, k, j, i, h, false),
                            scale2(prod2(ctx, k, j, i, h, true), Rational(-1)));
    Series2 t2 = add_series(scale2(prod2(ctx, i, -k, -j, h, false),
                                   sign_pow(phi, hat(k) + hat(-j))),
                            scale2(prod2(ctx, k, -i, -h, j, true),
                                   -sign_pow(phi, hat(i) + hat(-h))));
    Series2 t3 = add_series(prod2(ctx, k, -i, -j, h, false),
                            scale2(prod2(ctx, k, -i, -j, h, true), Rational(-1)));

    std::vector<CheckRecord> out;
    for (int a = 0; a <= order; ++a)
        for (int b = 0; b <= order; ++b) {
            CheckRecord rec = record(ctx, "quadratic");
            rec.i = i; rec.j = j;
            // (u^2 - v^2) [S,S] at u^{-a} v^{-b}
            PbwElement lhs = at2(comm, a + 2, b, ctx) - at2(comm, a, b + 2, ctx);
            // (u+v) t1 - (u-v) t2 + phi^{hat i + hat{-j}} t3
            PbwElement rhs = at2(t1, a + 1, b, ctx) + at2(t1, a, b + 1, ctx);
            rhs = rhs - (at2(t2, a + 1, b, ctx) - at2(t2, a, b + 1, ctx));
            rhs = rhs + at2(t3, a, b, ctx).scaled(sign_pow(phi, hat(i) + hat(-j)));
            PbwElement diff = lhs - rhs;
            rec.pass = diff.is_zero();
            if (!rec.pass)
                rec.witness = "at u^-" + std::to_string(a) + " v^-" + std::to_string(b) + ": " +
                              diff.str();
            out.push_back(std::move(rec));
        }
    return out;
}

} // namespace rectwalg
