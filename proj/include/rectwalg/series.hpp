#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rectwalg/number.hpp"
#include "rectwalg/tableaux.hpp"

namespace rectwalg {

/// Element of 1 + u^{-1} C[[u^{-1}]] kept in factored form: multisets of
/// constants c with factors (1 + c u^{-1}) in the numerator and
/// denominator.  Always reduced (no common factor).
class FactoredSeries {
public:
    FactoredSeries() = default;
    FactoredSeries(std::vector<Number> numer, std::vector<Number> denom);

    const std::vector<Number>& numer() const { return numer_; }
    const std::vector<Number>& denom() const { return denom_; }

    FactoredSeries times_factor(const Number& c) const;      // multiply by (1 + c u^{-1})
    FactoredSeries over_factor(const Number& c) const;       // divide by (1 + c u^{-1})

    friend bool operator==(const FactoredSeries& a, const FactoredSeries& b) {
        return a.numer_ == b.numer_ && a.denom_ == b.denom_;
    }

    std::string str() const;

private:
    void reduce();
    std::vector<Number> numer_;
    std::vector<Number> denom_;
};

/// lambda1 -> lambda2: the ratio is P(u+1)/P(u) for some monic P.  Decided
/// per Z-coset by sorted dominance of the reduced ratio's factor multisets.
bool series_arrow(const FactoredSeries& s1, const FactoredSeries& s2);

/// Oracle for series_arrow: exhaustive telescoping-chain search, bounded by
/// the total degree of the candidate P.
bool series_arrow_brute(const FactoredSeries& s1, const FactoredSeries& s2, int degree_budget);

/// mu(-u) => mu(u): the ratio is P(u+1)/P(u) for monic P with P(u)=P(1-u).
/// Clears denominators, passes to roots, cancels {a,-a} pairs and decides
/// the pairing by the mirror-greedy rule per coset pair.
bool series_double_arrow(const FactoredSeries& s);

/// All-pairings oracle used to validate the mirror-greedy decision.
bool series_double_arrow_brute(const FactoredSeries& s);

/// Feasibility of pairing a whole multiset with sums in Z_{>=0}
/// (mirror-greedy decision; exposed for the classification routes).
bool pairing_feasible(const std::vector<Number>& roots);
bool pairing_feasible_brute(const std::vector<Number>& roots);

/// Feasibility of pairing all but one element (odd-size lists).
bool odd_pairing_feasible(const std::vector<Number>& roots);

/// sharp-special element (strict pair sums > 0): the unique ge-maximal
/// leftover over all pairings, or nullopt when no pairing exists (or no
/// unique maximum).
std::optional<Number> sharp_special(const std::vector<Number>& xs);

/// sharp'-special element (pair sums >= 0, greedy minimal-sum ordering);
/// nullopt when no leftover admits a full pairing.
std::optional<Number> sharp_prime_special(const std::vector<Number>& xs);

/// Replace the sharp'-special element a by -1-a; throws std::domain_error
/// when the special element is undefined.
std::vector<Number> apply_mu_sharp(const std::vector<Number>& xs);

/// Highest-weight data mu_i(u) indexed by {1,3,...,n-1} (even n) or
/// {0,2,...,n-1} (odd n).
struct WeightData {
    int n = 0;
    std::map<int, FactoredSeries> entries;
};

/// The weight tuple of a row class: c_{i,j} = a_{i,j} + i/2 (plus the
/// middle-cell delta/2 shift when l is odd), packaged per index with the
/// (1 + (phi/2) u^{-1})^{-1} factor in the denominator for odd l.
WeightData tableau_weights(const RowClass& rc, const SignData& sd);

} // namespace rectwalg
