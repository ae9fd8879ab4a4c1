#include "rectwalg/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace rectwalg {

std::pair<bool, std::optional<Tableau>> is_findim_tableaux(const RowClass& rc,
                                                           const SignData& sd) {
    if (rc.n() != sd.n || rc.l() != sd.l)
        throw std::invalid_argument("is_findim_tableaux: shape mismatch");
    std::optional<Tableau> rep;
    if (sd.l % 2 != 0 || sd.eps == Sign::plus) rep = std_decision(rc, sd.eps);
    else rep = std_decision(a_plus(rc), Sign::plus);
    return {rep.has_value(), rep};
}

namespace {

const Number half{Rational(1, 2)};

/// Roots of (1 + (1/2) u^{-1}) mu: requires the product to be a polynomial
/// in u^{-1}.  The root list is only defined up to zero roots; pad to odd
/// size, which is the structural parity of every weight handled here.
std::vector<Number> cleared_roots(const FactoredSeries& mu) {
    FactoredSeries f = mu.times_factor(half);
    if (!f.denom().empty())
        throw std::domain_error("is_findim_yangian: weight is not polynomial after clearing");
    std::vector<Number> roots;
    for (const auto& c : f.numer()) roots.push_back(-c);
    if (roots.size() % 2 == 0) roots.push_back(Number(0));
    return roots;
}

FactoredSeries from_roots(const std::vector<Number>& roots) {
    std::vector<Number> numer;
    for (const auto& a : roots) numer.push_back(-a);
    return FactoredSeries(std::move(numer), {half});
}

bool arrow_chain(const WeightData& w, const FactoredSeries& first, int start) {
    const FactoredSeries* prev = &first;
    for (int i = start + 2; i <= w.n - 1; i += 2) {
        const FactoredSeries& next = w.entries.at(i);
        if (!series_arrow(*prev, next)) return false;
        prev = &next;
    }
    return true;
}

} // namespace

std::pair<bool, std::string> is_findim_yangian(const RowClass& rc, const SignData& sd) {
    WeightData w = tableau_weights(rc, sd);
    const Sign phi = sd.phi();

    if (phi == Sign::minus) {
        const FactoredSeries& mu1 = w.entries.at(1);
        bool ok = series_double_arrow(mu1) && arrow_chain(w, mu1, 1);
        return {ok, "y_n_minus"};
    }
    if (sd.n % 2 != 0) {
        const FactoredSeries& mu0 = w.entries.at(0);
        if (arrow_chain(w, mu0, 0)) return {true, "y_n_odd(i)"};
        if (arrow_chain(w, mu0.over_factor(half), 0)) return {true, "y_n_odd(ii)"};
        return {false, "y_n_odd"};
    }
    if (sd.n == 2) {
        bool ok = odd_pairing_feasible(cleared_roots(w.entries.at(1)));
        return {ok, "y_2"};
    }
    // phi = +, n > 2 even
    std::vector<Number> roots = cleared_roots(w.entries.at(1));
    auto special = sharp_prime_special(roots);
    if (!special) return {false, "y_n_plus"};
    const Number& a = *special;
    const FactoredSeries& mu1 = w.entries.at(1);
    if (ge(a, Number(Rational(-1, 2))) && arrow_chain(w, mu1, 1)) return {true, "y_n_plus(i)"};
    if (ge(a, Number(0)) && arrow_chain(w, mu1, 1)) return {true, "y_n_plus(ii)"};
    FactoredSeries mu1_sharp = from_roots(apply_mu_sharp(roots));
    if (ge(Number(Rational(-1, 2)), a) && arrow_chain(w, mu1_sharp, 1))
        return {true, "y_n_plus(iii)"};
    if (ge(Number(Rational(-1)), a) && arrow_chain(w, mu1_sharp, 1))
        return {true, "y_n_plus(iv)"};
    return {false, "y_n_plus"};
}

ClassificationResult classify_row_class(const RowClass& rc, const SignData& sd) {
    auto [ft, witness] = is_findim_tableaux(rc, sd);
    auto [fy, branch] = is_findim_yangian(rc, sd);
    return ClassificationResult{rc, sd, ft, fy, witness, branch};
}

RowClass c_action(const RowClass& rc, const SignData& sd) {
    if (rc.n() != sd.n || rc.l() != sd.l)
        throw std::invalid_argument("c_action: shape mismatch");
    bool case_c = sd.eps == Sign::minus && sd.n % 2 == 0 && sd.l % 2 == 0;
    bool case_cprime = sd.eps == Sign::plus && sd.n % 2 == 0 && sd.l % 2 != 0;
    if (!case_c && !case_cprime)
        throw std::domain_error("c_action: the component group is trivial here");
    std::vector<Number> list = rc.row(-1);
    if (case_c) list.insert(list.begin(), Number(0));
    auto a = sharp_special(list);
    if (!a || a->is_zero()) return rc;
    auto rows = rc.stored_rows();
    auto& r = rows.at(-1);
    auto it = std::find(r.begin(), r.end(), *a);
    if (it == r.end()) throw std::logic_error("c_action: special element not in row -1");
    *it = -*a;
    return RowClass(rc.n(), rc.l(), std::move(rows));
}

std::set<RowClass> orbit(const RowClass& rc, const SignData& sd) {
    return {rc, c_action(rc, sd)};
}

} // namespace rectwalg
