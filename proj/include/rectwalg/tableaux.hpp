#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "rectwalg/lie.hpp"
#include "rectwalg/number.hpp"

namespace rectwalg {

/// n x l grid of Numbers, rows indexed by I_n and columns by I_l,
/// skew-symmetric about the center: a_{i,j} = -a_{-i,-j}.
class Tableau {
public:
    Tableau(int n, int l, std::map<std::pair<int, int>, Number> entries);

    int n() const { return n_; }
    int l() const { return l_; }
    const Number& at(int i, int j) const;

    std::string str() const;

private:
    int n_, l_;
    std::map<std::pair<int, int>, Number> entries_;
};

/// Row-equivalence class: per-row multisets in canonical (sorted) order.
/// Rows i < 0 are stored explicitly (plus row 0 when n is odd, which must
/// be closed under negation); rows i > 0 are derived by negation.
class RowClass {
public:
    RowClass(int n, int l, std::map<int, std::vector<Number>> neg_rows);

    int n() const { return n_; }
    int l() const { return l_; }
    /// Sorted multiset of row i, for any i in I_n.
    std::vector<Number> row(int i) const;
    /// The stored (i <= 0) rows.
    const std::map<int, std::vector<Number>>& stored_rows() const { return rows_; }

    friend bool operator==(const RowClass& a, const RowClass& b) {
        return a.n_ == b.n_ && a.l_ == b.l_ && a.rows_ == b.rows_;
    }
    friend bool operator<(const RowClass& a, const RowClass& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        if (a.l_ != b.l_) return a.l_ < b.l_;
        return a.rows_ < b.rows_;
    }

    std::string str() const;

private:
    int n_, l_;
    std::map<int, std::vector<Number>> rows_; // keys: negative rows, and 0 if n odd
};

/// The row class of a tableau.
RowClass row_class(const Tableau& t);

/// eps-column-strictness: non-middle columns strictly decrease top to
/// bottom in the integer-difference order; the middle column (odd l)
/// decreases down to row -1 (n even) or row -2 (n odd) and satisfies
///   a_{-1,0} > 0            when eps = -
///   a_{-3,0} + a_{-1,0} > 0 when eps = + and n >= 4
///   2 a_{-2,0} > 0          when n is odd
/// with ">" meaning difference (or sum) in Z_{>0}.
bool is_column_strict(const Tableau& t, Sign eps);

/// A column-strict representative of the class, if one exists.  Exact
/// backtracking over row arrangements with per-column pruning.
std::optional<Tableau> std_decision(const RowClass& rc, Sign eps);

/// Brute-force oracle: enumerate every per-row arrangement and test
/// is_column_strict directly.
std::optional<Tableau> std_decision_brute(const RowClass& rc, Sign eps);

/// Insert the fixed middle column (n/2-1, ..., 1, 0, 0, -1, ..., 1-n/2 for
/// even n; the half-integer variant for odd n) into an even-l class.
RowClass a_plus(const RowClass& rc);

/// All row classes with rows drawn from the distinct values of `pool`
/// (combinations with repetition); row 0 enumerates only self-negating
/// multisets.  Calls `sink` on each class.
void enumerate_row_classes(int n, int l, const std::vector<Number>& pool,
                           const std::function<void(const RowClass&)>& sink);

std::vector<RowClass> enumerate_row_classes(int n, int l, const std::vector<Number>& pool);

} // namespace rectwalg
