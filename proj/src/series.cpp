#include "rectwalg/series.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rectwalg {

FactoredSeries::FactoredSeries(std::vector<Number> numer, std::vector<Number> denom)
    : numer_(std::move(numer)), denom_(std::move(denom)) {
    reduce();
}

void FactoredSeries::reduce() {
    // the factor (1 + 0 u^{-1}) is 1; drop zero constants for canonicity
    auto strip = [](std::vector<Number>& xs) {
        xs.erase(std::remove_if(xs.begin(), xs.end(),
                                [](const Number& x) { return x.is_zero(); }),
                 xs.end());
        std::sort(xs.begin(), xs.end());
    };
    strip(numer_);
    strip(denom_);
    std::vector<Number> n2, d2;
    size_t i = 0, j = 0;
    while (i < numer_.size() && j < denom_.size()) {
        if (numer_[i] == denom_[j]) { ++i; ++j; }
        else if (numer_[i] < denom_[j]) n2.push_back(numer_[i++]);
        else d2.push_back(denom_[j++]);
    }
    n2.insert(n2.end(), numer_.begin() + static_cast<long>(i), numer_.end());
    d2.insert(d2.end(), denom_.begin() + static_cast<long>(j), denom_.end());
    numer_ = std::move(n2);
    denom_ = std::move(d2);
}

FactoredSeries FactoredSeries::times_factor(const Number& c) const {
    auto n = numer_;
    n.push_back(c);
    return FactoredSeries(std::move(n), denom_);
}

FactoredSeries FactoredSeries::over_factor(const Number& c) const {
    auto d = denom_;
    d.push_back(c);
    return FactoredSeries(numer_, std::move(d));
}

std::string FactoredSeries::str() const {
    auto side = [](const std::vector<Number>& xs) {
        if (xs.empty()) return std::string("1");
        std::string out;
        for (const auto& c : xs) out += "(1+" + c.str() + " u^-1)";
        return out;
    };
    std::string out = side(numer_);
    if (!denom_.empty()) out += "/" + side(denom_);
    return out;
}

namespace {

// The reduced ratio s1/s2 as factor multisets (top, bottom).  Since
// (1 + 0 u^{-1}) = 1, factor counts are only defined up to zero padding:
// equalize the sides with explicit zero constants.
std::pair<std::vector<Number>, std::vector<Number>> ratio(const FactoredSeries& s1,
                                                          const FactoredSeries& s2) {
    std::vector<Number> top = s1.numer(), bot = s1.denom();
    top.insert(top.end(), s2.denom().begin(), s2.denom().end());
    bot.insert(bot.end(), s2.numer().begin(), s2.numer().end());
    FactoredSeries r(std::move(top), std::move(bot));
    auto a = r.numer(), b = r.denom();
    while (a.size() < b.size()) a.push_back(Number(0));
    while (b.size() < a.size()) b.push_back(Number(0));
    return {a, b};
}

std::map<CosetKey, std::vector<Number>> by_coset(const std::vector<Number>& xs) {
    std::map<CosetKey, std::vector<Number>> out;
    for (const auto& x : xs) out[coset_of(x)].push_back(x);
    return out;
}

} // namespace

bool series_arrow(const FactoredSeries& s1, const FactoredSeries& s2) {
    auto [top, bot] = ratio(s1, s2);
    if (top.size() != bot.size()) return false;
    auto gt_ = by_coset(top);
    auto gb = by_coset(bot);
    if (gt_.size() != gb.size()) return false;
    for (auto& [key, as] : gt_) {
        auto it = gb.find(key);
        if (it == gb.end() || it->second.size() != as.size()) return false;
        auto& bs = it->second;
        std::sort(as.begin(), as.end());
        std::sort(bs.begin(), bs.end());
        for (size_t k = 0; k < as.size(); ++k)
            if (!ge(as[k], bs[k])) return false;
    }
    return true;
}

bool series_arrow_brute(const FactoredSeries& s1, const FactoredSeries& s2, int degree_budget) {
    auto [top, bot] = ratio(s1, s2);
    if (top.size() != bot.size()) return false;
    // build P chain by chain: each b in the bottom climbs by integer steps
    // to some a in the top, spending (a - b) degrees of P
    std::function<bool(std::vector<Number>, std::vector<Number>, int)> rec =
        [&](std::vector<Number> a, std::vector<Number> b, int budget) {
            if (b.empty()) return true;
            Number want = b.back();
            b.pop_back();
            for (size_t k = 0; k < a.size(); ++k) {
                if (!ge(a[k], want)) continue;
                int cost = static_cast<int>((a[k].offset() - want.offset()).num());
                if (cost > budget) continue;
                auto a2 = a;
                a2.erase(a2.begin() + static_cast<long>(k));
                if (rec(a2, b, budget - cost)) return true;
            }
            return false;
        };
    return rec(top, bot, degree_budget);
}

namespace {

std::vector<Number> cancel_plus_minus_pairs(std::vector<Number> xs) {
    std::sort(xs.begin(), xs.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < xs.size() && !changed; ++i)
            for (size_t j = i + 1; j < xs.size() && !changed; ++j)
                if (xs[i] == -xs[j]) {
                    xs.erase(xs.begin() + static_cast<long>(j));
                    xs.erase(xs.begin() + static_cast<long>(i));
                    changed = true;
                }
    }
    return xs;
}

bool pairing_feasible_impl(const std::vector<Number>& roots, bool strict) {
    if (roots.size() % 2 != 0) return false;
    auto classes = by_coset(roots);
    std::set<CosetKey> done;
    for (auto& [key, xs] : classes) {
        if (done.count(key)) continue;
        CosetKey nk = key.negated();
        if (nk == key) {
            done.insert(key);
            if (xs.size() % 2 != 0) return false;
            auto v = xs;
            std::sort(v.begin(), v.end());
            for (size_t i = 0; i < v.size() / 2; ++i)
                if (!sum_nonneg_int(v[i], v[v.size() - 1 - i], strict)) return false;
        } else {
            done.insert(key);
            done.insert(nk);
            auto it = classes.find(nk);
            if (it == classes.end() || it->second.size() != xs.size()) return false;
            auto a = xs, b = it->second;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end(), [](const Number& x, const Number& y) { return y < x; });
            for (size_t i = 0; i < a.size(); ++i)
                if (!sum_nonneg_int(a[i], b[i], strict)) return false;
        }
    }
    return true;
}

bool pairing_feasible_brute_impl(std::vector<Number> xs, bool strict) {
    if (xs.empty()) return true;
    if (xs.size() % 2 != 0) return false;
    Number first = xs.front();
    xs.erase(xs.begin());
    std::set<Number> tried;
    for (size_t k = 0; k < xs.size(); ++k) {
        if (tried.count(xs[k])) continue;
        tried.insert(xs[k]);
        if (!sum_nonneg_int(first, xs[k], strict)) continue;
        auto rest = xs;
        rest.erase(rest.begin() + static_cast<long>(k));
        if (pairing_feasible_brute_impl(std::move(rest), strict)) return true;
    }
    return false;
}

} // namespace

bool pairing_feasible(const std::vector<Number>& roots) {
    return pairing_feasible_impl(cancel_plus_minus_pairs(roots), false);
}

bool pairing_feasible_brute(const std::vector<Number>& roots) {
    return pairing_feasible_brute_impl(roots, false);
}

bool odd_pairing_feasible(const std::vector<Number>& roots) {
    if (roots.size() % 2 == 0) return false;
    std::set<Number> tried;
    for (size_t k = 0; k < roots.size(); ++k) {
        if (tried.count(roots[k])) continue;
        tried.insert(roots[k]);
        auto rest = roots;
        rest.erase(rest.begin() + static_cast<long>(k));
        if (pairing_feasible(rest)) return true;
    }
    return false;
}

namespace {

std::vector<Number> roots_of(const FactoredSeries& s) {
    std::vector<Number> roots;
    for (const auto& c : s.numer()) roots.push_back(-c);
    for (const auto& d : s.denom()) roots.push_back(d);
    return roots;
}

} // namespace

bool series_double_arrow(const FactoredSeries& s) {
    std::vector<Number> roots = roots_of(s);
    // a zero root comes from the invisible factor (1 - 0 u^{-1}); one may be
    // adjoined freely, and more than one never helps
    if (roots.size() % 2 != 0) roots.push_back(Number(0));
    return pairing_feasible_impl(cancel_plus_minus_pairs(std::move(roots)), false);
}

bool series_double_arrow_brute(const FactoredSeries& s) {
    std::vector<Number> roots = roots_of(s);
    if (roots.size() % 2 != 0) roots.push_back(Number(0));
    return pairing_feasible_brute_impl(std::move(roots), false);
}

std::optional<Number> sharp_special(const std::vector<Number>& xs) {
    if (xs.size() % 2 == 0) throw std::invalid_argument("sharp_special: even length");
    std::set<Number> outcomes;
    std::set<Number> tried;
    for (size_t k = 0; k < xs.size(); ++k) {
        if (tried.count(xs[k])) continue;
        tried.insert(xs[k]);
        auto rest = xs;
        rest.erase(rest.begin() + static_cast<long>(k));
        if (pairing_feasible_brute_impl(std::move(rest), true)) outcomes.insert(xs[k]);
    }
    if (outcomes.empty()) return std::nullopt;
    for (const auto& cand : outcomes) {
        bool maximal = true;
        for (const auto& other : outcomes)
            if (!ge(cand, other)) { maximal = false; break; }
        if (maximal) return cand;
    }
    return std::nullopt; // no unique maximum
}

std::optional<Number> sharp_prime_special(const std::vector<Number>& xs) {
    if (xs.size() % 2 == 0) throw std::invalid_argument("sharp_prime_special: even length");
    if (!odd_pairing_feasible(xs)) return std::nullopt;
    std::vector<Number> remaining = xs;
    while (remaining.size() > 1) {
        // extract the pair with the minimal non-negative integer sum
        std::optional<long long> best;
        std::pair<size_t, size_t> best_idx{0, 0};
        for (size_t i = 0; i < remaining.size(); ++i)
            for (size_t j = i + 1; j < remaining.size(); ++j) {
                if (!sum_nonneg_int(remaining[i], remaining[j])) continue;
                long long sum = (remaining[i].offset() + remaining[j].offset()).num();
                if (!best || sum < *best) {
                    best = sum;
                    best_idx = {i, j};
                }
            }
        if (!best) throw std::logic_error("sharp_prime_special: greedy stranded");
        remaining.erase(remaining.begin() + static_cast<long>(best_idx.second));
        remaining.erase(remaining.begin() + static_cast<long>(best_idx.first));
    }
    return remaining.front();
}

std::vector<Number> apply_mu_sharp(const std::vector<Number>& xs) {
    auto sp = sharp_prime_special(xs);
    if (!sp) throw std::domain_error("apply_mu_sharp: special element undefined");
    std::vector<Number> out = xs;
    auto it = std::find(out.begin(), out.end(), *sp);
    *it = Number(Rational(-1)) - *sp;
    return out;
}

WeightData tableau_weights(const RowClass& rc, const SignData& sd) {
    if (rc.n() != sd.n || rc.l() != sd.l)
        throw std::invalid_argument("tableau_weights: shape mismatch");
    const bool odd_l = sd.l % 2 != 0;
    const Sign phi = sd.phi();
    WeightData w;
    w.n = sd.n;
    int start = sd.n % 2 == 0 ? 1 : 0;
    for (int i = start; i <= sd.n - 1; i += 2) {
        std::vector<Number> cs;
        auto row = rc.row(i);
        if (odd_l && i == 0) {
            // one middle 0 picks up the delta/2 shift
            auto it = std::find(row.begin(), row.end(), Number(0));
            if (it == row.end())
                throw std::logic_error("tableau_weights: self-skew middle row lacks a zero");
            row.erase(it);
            cs.push_back(Number(Rational(1, 2)));
        }
        for (const auto& a : row) cs.push_back(a + Number(Rational(i, 2)));
        std::vector<Number> denom;
        if (odd_l) denom.push_back(Number(Rational(sign_value(phi), 2)));
        w.entries.emplace(i, FactoredSeries(std::move(cs), std::move(denom)));
    }
    if (start == 0) {
        // mu_0 must lie in 1 + u^{-2} C[[u^{-2}]]
        const FactoredSeries& mu0 = w.entries.at(0);
        auto even_check = [](const std::vector<Number>& xs) {
            std::vector<Number> neg;
            for (const auto& x : xs) neg.push_back(-x);
            std::sort(neg.begin(), neg.end());
            return neg == xs;
        };
        if (!even_check(mu0.numer()) || !even_check(mu0.denom()))
            throw std::logic_error("tableau_weights: mu_0 is not even");
    }
    return w;
}

} // namespace rectwalg
