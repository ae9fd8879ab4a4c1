#include "rectwalg/pbw.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rectwalg {

namespace {

Rational rho_shift(const SignData& sd, int q) {
    if (q == 0) return Rational(0);
    int e = sign_value(sd.eps);
    return q > 0 ? Rational(sd.n * q - e, 2) : Rational(sd.n * q + e, 2);
}

} // namespace

Presentation::Presentation(const Pyramid& pyr) : pyr_(pyr) {
    auto add_block = [&](Subalgebra which) {
        auto pairs = subalgebra_pairs(pyr_, which);
        std::stable_sort(pairs.begin(), pairs.end(), [&](const BasisPair& x, const BasisPair& y) {
            auto key = [&](const BasisPair& p) {
                return std::make_tuple(pyr_.col_of(p.b) - pyr_.col_of(p.a), pyr_.row_of(p.a),
                                       pyr_.col_of(p.a), pyr_.row_of(p.b), pyr_.col_of(p.b));
            };
            return key(x) < key(y);
        });
        for (auto [a, b] : pairs) {
            Gen g;
            g.a = a;
            g.b = b;
            g.degree = pyr_.col_of(b) - pyr_.col_of(a);
            g.chi = g.degree < 0
                        ? chi_character(f_element(pyr_.dim(), a, b, pyr_.signdata().eps), pyr_)
                        : Rational(0);
            g.rho = (a == b) ? rho_shift(pyr_.signdata(), pyr_.col_of(a)) : Rational(0);
            g.name = "f[" + std::to_string(a) + "," + std::to_string(b) + "]";
            pair_to_id_[{a, b}] = static_cast<int>(gens_.size());
            gens_.push_back(g);
        }
    };
    add_block(Subalgebra::p);
    first_m_ = static_cast<int>(gens_.size());
    add_block(Subalgebra::m);

    const int d = size();
    brackets_.resize(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i) {
        LieElement fi = f_element(pyr_.dim(), gens_[i].a, gens_[i].b, pyr_.signdata().eps);
        for (int j = 0; j < d; ++j) {
            if (j < i) continue;
            LieElement fj = f_element(pyr_.dim(), gens_[j].a, gens_[j].b, pyr_.signdata().eps);
            auto coeffs = decompose_in_basis(rectwalg::bracket(fi, fj), pyr_);
            auto& out = brackets_[static_cast<size_t>(i) * d + j];
            for (const auto& [pair, c] : coeffs) out.emplace_back(pair_to_id_.at(pair), c);
            auto& rev = brackets_[static_cast<size_t>(j) * d + i];
            for (const auto& [id, c] : out) rev.emplace_back(id, -c);
        }
    }
    if (d <= 40) check_jacobi();
}

const std::vector<std::pair<int, Rational>>& Presentation::bracket(int i, int j) const {
    return brackets_[static_cast<size_t>(i) * size() + j];
}

int Presentation::id_of_pair(int a, int b) const {
    auto it = pair_to_id_.find({a, b});
    return it == pair_to_id_.end() ? -1 : it->second;
}

void Presentation::check_jacobi() const {
    const int d = size();
    auto acc = [&](std::map<int, Rational>& sums, const std::vector<std::pair<int, Rational>>& xs,
                   int k, const Rational& scale) {
        for (const auto& [id, c] : xs)
            for (const auto& [id2, c2] : bracket(id, k)) sums[id2] += c * c2 * scale;
    };
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k) {
                std::map<int, Rational> sums;
                acc(sums, bracket(i, j), k, Rational(1));
                acc(sums, bracket(j, k), i, Rational(1));
                acc(sums, bracket(k, i), j, Rational(1));
                for (const auto& [id, c] : sums)
                    if (!c.is_zero()) throw std::logic_error("Presentation: Jacobi identity fails");
            }
}

std::shared_ptr<const Presentation> Presentation::for_pyramid(const Pyramid& pyr) {
    return std::shared_ptr<const Presentation>(new Presentation(pyr));
}

PbwElement PbwElement::scalar(std::shared_ptr<const Presentation> pres, const Rational& c) {
    PbwElement x(std::move(pres));
    x.add_term({}, c);
    return x;
}

PbwElement PbwElement::generator(std::shared_ptr<const Presentation> pres, int id) {
    PbwElement x(std::move(pres));
    x.add_term({static_cast<int16_t>(id)}, Rational(1));
    return x;
}

void PbwElement::add_term(const Mono& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

namespace {

const std::shared_ptr<const Presentation>& common_pres(const PbwElement& x, const PbwElement& y) {
    if (x.presentation() && y.presentation() && x.presentation() != y.presentation())
        throw std::invalid_argument("PbwElement: presentation mismatch");
    return x.presentation() ? x.presentation() : y.presentation();
}

// Straighten an arbitrary word into PBW normal form, accumulating into out.
void normal_form(const Presentation& pres, Mono word, Rational coeff, PbwElement& out) {
    std::vector<std::pair<Mono, Rational>> work;
    work.emplace_back(std::move(word), std::move(coeff));
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        size_t i = 0;
        while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
        if (i + 1 >= w.size()) {
            out.add_term(w, c);
            continue;
        }
        // w[i] > w[i+1]: swap and add the bracket terms.
        Mono swapped = w;
        std::swap(swapped[i], swapped[i + 1]);
        work.emplace_back(std::move(swapped), c);
        for (const auto& [id, bc] : pres.bracket(w[i], w[i + 1])) {
            Mono shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<long>(i));
            shorter.push_back(static_cast<int16_t>(id));
            shorter.insert(shorter.end(), w.begin() + static_cast<long>(i) + 2, w.end());
            work.emplace_back(std::move(shorter), c * bc);
        }
    }
}

} // namespace

PbwElement operator+(const PbwElement& x, const PbwElement& y) {
    PbwElement r(common_pres(x, y));
    for (const auto& [m, c] : x.terms()) r.add_term(m, c);
    for (const auto& [m, c] : y.terms()) r.add_term(m, c);
    return r;
}

PbwElement operator-(const PbwElement& x, const PbwElement& y) {
    PbwElement r(common_pres(x, y));
    for (const auto& [m, c] : x.terms()) r.add_term(m, c);
    for (const auto& [m, c] : y.terms()) r.add_term(m, -c);
    return r;
}

PbwElement operator*(const PbwElement& x, const PbwElement& y) {
    auto pres = common_pres(x, y);
    PbwElement r(pres);
    for (const auto& [mx, cx] : x.terms()) {
        for (const auto& [my, cy] : y.terms()) {
            Mono w = mx;
            w.insert(w.end(), my.begin(), my.end());
            normal_form(*pres, std::move(w), cx * cy, r);
        }
    }
    return r;
}

PbwElement PbwElement::scaled(const Rational& q) const {
    PbwElement r(pres_);
    if (q.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.terms_[m] = c * q;
    return r;
}

std::string PbwElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << c.str();
        for (int16_t id : m) os << "*" << (pres_ ? pres_->gen(id).name : std::to_string(id));
        first = false;
    }
    return os.str();
}

PbwElement commutator(const PbwElement& x, const PbwElement& y) { return x * y - y * x; }

PbwElement embed(const LieElement& x, const std::shared_ptr<const Presentation>& pres) {
    PbwElement r(pres);
    for (const auto& [pair, c] : decompose_in_basis(x, pres->pyramid())) {
        int id = pres->id_of_pair(pair.first, pair.second);
        if (id < 0) throw std::logic_error("embed: missing basis pair");
        r.add_term({static_cast<int16_t>(id)}, c);
    }
    return r;
}

PbwElement pr_project(const PbwElement& x) {
    const auto& pres = x.presentation();
    PbwElement r(pres);
    for (const auto& [m, c] : x.terms()) {
        Rational scale = c;
        Mono head;
        for (int16_t id : m) {
            if (id >= pres->first_m()) scale *= pres->gen(id).chi;
            else head.push_back(id);
        }
        r.add_term(head, scale);
    }
    return r;
}

PbwElement xi_project(const PbwElement& x) {
    const auto& pres = x.presentation();
    PbwElement r(pres);
    for (const auto& [m, c] : x.terms()) {
        bool keep = true;
        for (int16_t id : m) {
            if (id >= pres->first_m())
                throw std::domain_error("xi_project: element is not in U(p)");
            if (pres->gen(id).degree > 0) { keep = false; break; }
        }
        if (keep) r.add_term(m, c);
    }
    return r;
}

PbwElement eta_shift(const PbwElement& x) {
    const auto& pres = x.presentation();
    PbwElement r(pres);
    for (const auto& [m, c] : x.terms()) {
        std::vector<size_t> diag;
        for (size_t i = 0; i < m.size(); ++i)
            if (!pres->gen(m[i]).rho.is_zero()) diag.push_back(i);
        // (g - rho) factors expand without reordering: subsets of diagonal
        // positions dropped, each contributing -rho.
        size_t k = diag.size();
        for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
            Rational coeff = c;
            Mono kept;
            size_t di = 0;
            for (size_t i = 0; i < m.size(); ++i) {
                if (di < k && diag[di] == i) {
                    if (mask & (size_t{1} << di)) coeff *= -pres->gen(m[i]).rho;
                    else kept.push_back(m[i]);
                    ++di;
                } else {
                    kept.push_back(m[i]);
                }
            }
            r.add_term(kept, coeff);
        }
    }
    return r;
}

PbwElement miura(const PbwElement& x) { return eta_shift(xi_project(x)); }

} // namespace rectwalg
