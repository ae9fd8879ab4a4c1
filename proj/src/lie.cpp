#include "rectwalg/lie.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rectwalg {

std::vector<int> index_set(int n) {
    std::vector<int> out;
    out.reserve(n);
    for (int i = 1 - n; i <= n - 1; i += 2) out.push_back(i);
    return out;
}

std::optional<std::string> SignData::violation() const {
    if (n < 1 || l < 1) return "n and l must be positive";
    if (eps == Sign::plus && l % 2 == 0 && n % 2 != 0)
        return "eps=+ with l even requires n even";
    if (eps == Sign::minus && l % 2 != 0 && n % 2 != 0)
        return "eps=- with l odd requires n even";
    if (eps == Sign::minus && (n * l) % 2 != 0)
        return "eps=- requires n*l even";
    if (n % 2 != 0 && phi() != Sign::plus)
        return "n odd requires phi=+ (l odd needs eps=+, l even needs eps=-)";
    return std::nullopt;
}

SignData SignData::make(Sign eps, int n, int l) {
    SignData sd{eps, n, l};
    if (auto bad = sd.violation()) throw std::invalid_argument("SignData: " + *bad);
    return sd;
}

Pyramid::Pyramid(SignData sd, Labeling lab) : sd_(SignData::make(sd.eps, sd.n, sd.l)), labeling_(lab) {
    const int n = sd_.n, l = sd_.l;
    labels_ = index_set(n * l);
    if (lab == Labeling::column_major_reversed && l % 2 != 0)
        throw std::invalid_argument("Pyramid: reversed labeling is unsupported for odd l");
    auto rows = index_set(n);
    auto cols = index_set(l);
    for (int c = 0; c < l; ++c) {
        for (int r = 0; r < n; ++r) {
            int pos_in_col = (lab == Labeling::column_major) ? r : (n - 1 - r);
            int label = labels_[static_cast<size_t>(c) * n + pos_in_col];
            pos_[label] = {rows[r], cols[c]};
            label_at_[{rows[r], cols[c]}] = label;
        }
    }
    // The constraints hold for both labelings by construction; verify anyway.
    for (int a : labels_) {
        if (row_of(-a) != -row_of(a) || col_of(-a) != -col_of(a))
            throw std::logic_error("Pyramid: labeling is not skew-symmetric");
        if (sd_.eps == Sign::minus) {
            bool upper = col_of(a) > 0 || (col_of(a) == 0 && row_of(a) > 0);
            if (upper != (a > 0))
                throw std::logic_error("Pyramid: eps=- positivity convention violated");
        }
    }
}

int Pyramid::row_of(int label) const {
    auto it = pos_.find(label);
    if (it == pos_.end()) throw std::out_of_range("Pyramid: label out of range");
    return it->second.first;
}

int Pyramid::col_of(int label) const {
    auto it = pos_.find(label);
    if (it == pos_.end()) throw std::out_of_range("Pyramid: label out of range");
    return it->second.second;
}

int Pyramid::box(int row, int col) const {
    auto it = label_at_.find({row, col});
    if (it == label_at_.end()) throw std::out_of_range("Pyramid: no box at (row, col)");
    return it->second;
}

std::string Pyramid::grid_str() const {
    std::ostringstream os;
    for (int r : index_set(sd_.n)) {
        for (int c : index_set(sd_.l)) os << box(r, c) << "\t";
        os << "\n";
    }
    return os.str();
}

void LieElement::add_unit(int a, int b, const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational LieElement::coeff(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Rational(0) : it->second;
}

LieElement operator+(const LieElement& x, const LieElement& y) {
    LieElement r = x;
    for (const auto& [k, c] : y.terms_) r.add_unit(k.first, k.second, c);
    return r;
}

LieElement operator-(const LieElement& x, const LieElement& y) {
    LieElement r = x;
    for (const auto& [k, c] : y.terms_) r.add_unit(k.first, k.second, -c);
    return r;
}

LieElement LieElement::scaled(const Rational& q) const {
    LieElement r;
    if (q.is_zero()) return r;
    for (const auto& [k, c] : terms_) r.terms_[k] = c * q;
    return r;
}

LieElement mul(const LieElement& x, const LieElement& y) {
    LieElement r;
    for (const auto& [kx, cx] : x.terms_)
        for (const auto& [ky, cy] : y.terms_)
            if (kx.second == ky.first) r.add_unit(kx.first, ky.second, cx * cy);
    return r;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
    return mul(x, y) - mul(y, x);
}

std::string LieElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        os << c.str() << "*E[" << k.first << "," << k.second << "]";
        first = false;
    }
    return os.str();
}

size_t RatMatrix::idx(int i, int j) const {
    int oi = (i - (1 - m_)) / 2, oj = (j - (1 - m_)) / 2;
    if (oi < 0 || oi >= m_ || oj < 0 || oj >= m_ || (i - (1 - m_)) % 2 != 0 || (j - (1 - m_)) % 2 != 0)
        throw std::out_of_range("RatMatrix: index not in I_m");
    return static_cast<size_t>(oi) * m_ + oj;
}

RatMatrix RatMatrix::identity(int m) {
    RatMatrix r(m);
    for (int i : index_set(m)) r.at(i, i) = Rational(1);
    return r;
}

RatMatrix RatMatrix::from_lie(const LieElement& x, int m) {
    RatMatrix r(m);
    for (const auto& [k, c] : x.terms()) r.at(k.first, k.second) = c;
    return r;
}

LieElement RatMatrix::to_lie() const {
    LieElement x;
    for (int i : index_set(m_))
        for (int j : index_set(m_)) x.add_unit(i, j, at(i, j));
    return x;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.m_ != b.m_) throw std::invalid_argument("RatMatrix: size mismatch");
    RatMatrix r(a.m_);
    auto idxs = index_set(a.m_);
    for (int i : idxs)
        for (int k : idxs) {
            if (a.at(i, k).is_zero()) continue;
            for (int j : idxs) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix r(m_);
    for (int i : index_set(m_))
        for (int j : index_set(m_)) r.at(j, i) = at(i, j);
    return r;
}

namespace {

// Gaussian elimination over Q; returns (rank, det) for the square input.
std::pair<int, Rational> eliminate(RatMatrix a) {
    const int m = a.size();
    auto idxs = index_set(m);
    Rational det(1);
    int rank = 0;
    for (int col = 0; col < m && rank < m; ++col) {
        int pivot = -1;
        for (int r = rank; r < m; ++r)
            if (!a.at(idxs[r], idxs[col]).is_zero()) { pivot = r; break; }
        if (pivot < 0) { det = Rational(0); continue; }
        if (pivot != rank) {
            for (int c = 0; c < m; ++c)
                std::swap(a.at(idxs[pivot], idxs[c]), a.at(idxs[rank], idxs[c]));
            det = -det;
        }
        Rational pv = a.at(idxs[rank], idxs[col]);
        det *= pv;
        for (int r = rank + 1; r < m; ++r) {
            Rational f = a.at(idxs[r], idxs[col]) / pv;
            if (f.is_zero()) continue;
            for (int c = col; c < m; ++c)
                a.at(idxs[r], idxs[c]) -= f * a.at(idxs[rank], idxs[c]);
        }
        ++rank;
    }
    if (rank < m) det = Rational(0);
    return {rank, det};
}

} // namespace

Rational RatMatrix::det() const { return eliminate(*this).second; }
int RatMatrix::rank() const { return eliminate(*this).first; }

LieElement f_element(int m, int i, int j, Sign eps) {
    auto in_range = [m](int v) { return v >= 1 - m && v <= m - 1 && (v - (1 - m)) % 2 == 0; };
    if (!in_range(i) || !in_range(j)) throw std::out_of_range("f_element: index not in I_m");
    LieElement x;
    x.add_unit(i, j, Rational(1));
    x.add_unit(-j, -i, -sign_pow(eps, hat(i) + hat(j)));
    return x;
}

RatMatrix form_matrix(int m, Sign eps) {
    RatMatrix J(m);
    for (int j : index_set(m)) {
        Rational v(1);
        if (eps == Sign::minus) {
            if (j == 0) throw std::invalid_argument("form_matrix: eps=- requires m even");
            v = Rational(j > 0 ? 1 : -1);
        }
        J.at(-j, j) = v;
    }
    return J;
}

LieElement nilpotent_e(const Pyramid& pyr) {
    const Sign eps = pyr.signdata().eps;
    LieElement e;
    for (int a : pyr.labels()) {
        for (int b : pyr.labels()) {
            if (pyr.row_of(a) != pyr.row_of(b)) continue;
            if (pyr.col_of(a) + 2 != pyr.col_of(b)) continue;
            const int cb = pyr.col_of(b);
            const int row = pyr.row_of(a);
            Rational c(0);
            if (cb >= 2) c = Rational(1);
            else if (cb == 1 && row > 0) c = Rational(1);
            else if (cb == 1 && row == 0) c = Rational(1, 2);
            if (c.is_zero()) continue;
            e = e + f_element(pyr.dim(), a, b, eps).scaled(c);
        }
    }
    return e;
}

LieElement cartan_h(const Pyramid& pyr) {
    LieElement h;
    for (int a : pyr.labels()) h.add_unit(a, a, Rational(pyr.col_of(-a)));
    return h;
}

std::optional<int> degree(const LieElement& x, const Pyramid& pyr) {
    std::optional<int> deg;
    for (const auto& [k, c] : x.terms()) {
        int d = pyr.col_of(k.second) - pyr.col_of(k.first);
        if (!deg) deg = d;
        else if (*deg != d) return std::nullopt;
    }
    return deg;
}

Rational chi_character(const LieElement& x, const Pyramid& pyr) {
    for (const auto& [k, c] : x.terms())
        if (pyr.col_of(k.second) - pyr.col_of(k.first) >= 0)
            throw std::domain_error("chi_character: element is not in m");
    LieElement prod = mul(x, nilpotent_e(pyr));
    Rational tr(0);
    for (int a : pyr.labels()) tr += prod.coeff(a, a);
    return tr * Rational(1, 2);
}

namespace {

bool admissible(int a, int b, Sign eps) {
    return eps == Sign::plus ? a + b < 0 : a + b <= 0;
}

} // namespace

std::vector<BasisPair> subalgebra_pairs(const Pyramid& pyr, Subalgebra which) {
    const Sign eps = pyr.signdata().eps;
    std::vector<BasisPair> out;
    for (int a : pyr.labels()) {
        for (int b : pyr.labels()) {
            if (!admissible(a, b, eps)) continue;
            int d = pyr.col_of(b) - pyr.col_of(a);
            if (which == Subalgebra::m && d >= 0) continue;
            if (which == Subalgebra::p && d < 0) continue;
            if (which == Subalgebra::h0 && d != 0) continue;
            out.push_back({a, b});
        }
    }
    return out;
}

std::vector<LieElement> subalgebra_basis(const Pyramid& pyr, Subalgebra which) {
    std::vector<LieElement> out;
    for (auto [a, b] : subalgebra_pairs(pyr, which))
        out.push_back(f_element(pyr.dim(), a, b, pyr.signdata().eps));
    return out;
}

std::map<std::pair<int, int>, Rational> decompose_in_basis(const LieElement& x,
                                                           const Pyramid& pyr) {
    const Sign eps = pyr.signdata().eps;
    std::map<std::pair<int, int>, Rational> coeffs;
    // Each matrix unit e_{u,v} occurs in exactly one admissible f_{a,b}:
    // that of (u,v) itself or of (-v,-u).  Solve per support group and
    // verify the mirrored unit for consistency.
    std::map<std::pair<int, int>, Rational> left(x.terms().begin(), x.terms().end());
    while (!left.empty()) {
        auto [u, v] = left.begin()->first;
        std::pair<int, int> owner;
        if (admissible(u, v, eps)) owner = {u, v};
        else if (admissible(-v, -u, eps)) owner = {-v, -u};
        else throw std::domain_error("decompose_in_basis: unit e[" + std::to_string(u) + "," +
                                     std::to_string(v) + "] has no admissible owner");
        LieElement f = f_element(pyr.dim(), owner.first, owner.second, eps);
        Rational own = f.coeff(u, v);
        if (own.is_zero()) throw std::domain_error("decompose_in_basis: not in the subalgebra");
        Rational lambda = left.begin()->second / own;
        for (const auto& [fk, fc] : f.terms()) {
            auto it = left.find(fk);
            Rational cur = it == left.end() ? Rational(0) : it->second;
            if (cur != lambda * fc)
                throw std::domain_error("decompose_in_basis: not in the subalgebra");
            if (it != left.end()) left.erase(it);
        }
        coeffs[owner] += lambda;
    }
    return coeffs;
}

RatMatrix component_generator(const Pyramid& pyr) {
    const SignData& sd = pyr.signdata();
    bool case_minus = sd.eps == Sign::minus && sd.n % 2 == 0 && sd.l % 2 == 0;
    bool case_plus = sd.eps == Sign::plus && sd.n % 2 == 0 && sd.l % 2 != 0;
    if (!case_minus && !case_plus)
        throw std::domain_error("component_generator: the component group is trivial here");
    RatMatrix c(pyr.dim());
    for (int a : pyr.labels()) {
        int r = pyr.row_of(a);
        if (r != 1 && r != -1) {
            c.at(a, a) = Rational(1);
        } else {
            int b = pyr.box(-r, pyr.col_of(a));
            c.at(a, b) = Rational(1);
        }
    }
    return c;
}

} // namespace rectwalg
