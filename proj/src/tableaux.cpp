#include "rectwalg/tableaux.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rectwalg {

Tableau::Tableau(int n, int l, std::map<std::pair<int, int>, Number> entries)
    : n_(n), l_(l), entries_(std::move(entries)) {
    for (int i : index_set(n_))
        for (int j : index_set(l_)) {
            auto it = entries_.find({i, j});
            if (it == entries_.end()) throw std::invalid_argument("Tableau: missing entry");
            auto mirror = entries_.find({-i, -j});
            if (mirror == entries_.end() || !(mirror->second == -it->second))
                throw std::invalid_argument("Tableau: skew symmetry violated");
        }
}

const Number& Tableau::at(int i, int j) const {
    auto it = entries_.find({i, j});
    if (it == entries_.end()) throw std::out_of_range("Tableau: index");
    return it->second;
}

std::string Tableau::str() const {
    std::ostringstream os;
    for (int i : index_set(n_)) {
        for (int j : index_set(l_)) os << at(i, j).str() << "\t";
        os << "\n";
    }
    return os.str();
}

RowClass::RowClass(int n, int l, std::map<int, std::vector<Number>> neg_rows)
    : n_(n), l_(l), rows_(std::move(neg_rows)) {
    for (int i : index_set(n_)) {
        if (i > 0) {
            if (rows_.count(i)) throw std::invalid_argument("RowClass: positive rows are derived");
            continue;
        }
        auto it = rows_.find(i);
        if (it == rows_.end()) throw std::invalid_argument("RowClass: missing row");
        if (static_cast<int>(it->second.size()) != l_)
            throw std::invalid_argument("RowClass: row size must be l");
        std::sort(it->second.begin(), it->second.end());
    }
    if (rows_.size() != static_cast<size_t>((n_ + 1) / 2))
        throw std::invalid_argument("RowClass: unexpected row keys");
    if (n_ % 2 != 0) {
        // middle row must equal its own negation as a multiset
        std::vector<Number> neg;
        for (const auto& x : rows_.at(0)) neg.push_back(-x);
        std::sort(neg.begin(), neg.end());
        if (neg != rows_.at(0))
            throw std::invalid_argument("RowClass: middle row is not self-skew");
    }
}

std::vector<Number> RowClass::row(int i) const {
    if (i <= 0) {
        auto it = rows_.find(i);
        if (it == rows_.end()) throw std::out_of_range("RowClass: row index");
        return it->second;
    }
    auto it = rows_.find(-i);
    if (it == rows_.end()) throw std::out_of_range("RowClass: row index");
    std::vector<Number> out;
    for (const auto& x : it->second) out.push_back(-x);
    std::sort(out.begin(), out.end());
    return out;
}

std::string RowClass::str() const {
    std::ostringstream os;
    bool firstrow = true;
    for (int i : index_set(n_)) {
        if (!firstrow) os << "; ";
        os << i << ":[";
        bool first = true;
        for (const auto& x : row(i)) {
            if (!first) os << ",";
            os << x.str();
            first = false;
        }
        os << "]";
        firstrow = false;
    }
    return os.str();
}

RowClass row_class(const Tableau& t) {
    std::map<int, std::vector<Number>> rows;
    for (int i : index_set(t.n())) {
        if (i > 0) continue;
        std::vector<Number> r;
        for (int j : index_set(t.l())) r.push_back(t.at(i, j));
        rows[i] = std::move(r);
    }
    return RowClass(t.n(), t.l(), std::move(rows));
}

bool is_column_strict(const Tableau& t, Sign eps) {
    const int n = t.n(), l = t.l();
    auto rows = index_set(n);
    for (int j : index_set(l)) {
        if (j == 0) continue;
        for (size_t k = 0; k + 1 < rows.size(); ++k)
            if (!gt(t.at(rows[k], j), t.at(rows[k + 1], j))) return false;
    }
    if (l % 2 != 0) {
        if (n % 2 == 0) {
            for (int i = 1 - n; i + 2 <= -1; i += 2)
                if (!gt(t.at(i, 0), t.at(i + 2, 0))) return false;
            if (eps == Sign::minus && !gt(t.at(-1, 0), Number(0))) return false;
            if (eps == Sign::plus && n >= 4 &&
                !sum_nonneg_int(t.at(-3, 0), t.at(-1, 0), true))
                return false;
        } else if (n >= 3) {
            for (int i = 1 - n; i + 2 <= -2; i += 2)
                if (!gt(t.at(i, 0), t.at(i + 2, 0))) return false;
            if (!sum_nonneg_int(t.at(-2, 0), t.at(-2, 0), true)) return false;
        }
        // n = 1 has no row above the middle one, hence no middle constraint
    }
    return true;
}

namespace {

struct Grid {
    int n, l;
    std::map<std::pair<int, int>, Number> cells;

    void set_row(int i, const std::vector<Number>& vals) {
        auto cols = index_set(l);
        for (size_t c = 0; c < cols.size(); ++c) {
            cells[{i, cols[c]}] = vals[c];
            cells[{-i, -cols[c]}] = -vals[c];
        }
    }

    Tableau to_tableau() const { return Tableau(n, l, cells); }
};

// All anti-palindromic arrangements of the middle row: entries for the
// positive columns determine the rest; the middle cell must be 0.
void middle_row_arrangements(const std::vector<Number>& multiset, int l,
                             const std::function<bool(const std::vector<Number>&)>& sink) {
    auto cols = index_set(l);
    std::vector<Number> remaining = multiset;
    std::vector<Number> picked;
    bool stop = false;
    std::function<void()> rec = [&]() {
        if (stop) return;
        if (static_cast<int>(picked.size()) == l / 2) {
            if (l % 2 != 0) {
                // exactly one 0 must be left for the middle cell
                if (remaining.size() != 1 || !remaining[0].is_zero()) return;
            }
            std::vector<Number> row(static_cast<size_t>(l));
            size_t pi = 0;
            for (int c = 0; c < l; ++c)
                if (cols[static_cast<size_t>(c)] > 0) row[static_cast<size_t>(c)] = picked[pi++];
            for (int c = 0; c < l; ++c)
                if (cols[static_cast<size_t>(c)] < 0)
                    row[static_cast<size_t>(c)] = -row[static_cast<size_t>(l - 1 - c)];
            if (l % 2 != 0) row[static_cast<size_t>(l / 2)] = Number(0);
            if (sink(row)) stop = true;
            return;
        }
        std::set<Number> tried;
        for (size_t k = 0; k < remaining.size() && !stop; ++k) {
            Number x = remaining[k];
            if (tried.count(x)) continue;
            tried.insert(x);
            // removing x and -x must both be possible
            auto rem = remaining;
            rem.erase(rem.begin() + static_cast<long>(k));
            auto it = std::find(rem.begin(), rem.end(), -x);
            if (it == rem.end()) continue;
            rem.erase(it);
            picked.push_back(x);
            std::swap(remaining, rem);
            rec();
            std::swap(remaining, rem);
            picked.pop_back();
        }
    };
    rec();
}

bool final_checks_even_n(const Grid& g, Sign eps) {
    const int l = g.l;
    for (int j : index_set(l)) {
        if (j <= 0) continue;
        if (!sum_nonneg_int(g.cells.at({-1, j}), g.cells.at({-1, -j}), true)) return false;
    }
    if (l % 2 != 0) {
        if (eps == Sign::minus && !gt(g.cells.at({-1, 0}), Number(0))) return false;
        if (eps == Sign::plus && g.n >= 4 &&
            !sum_nonneg_int(g.cells.at({-3, 0}), g.cells.at({-1, 0}), true))
            return false;
    }
    return true;
}

} // namespace

std::optional<Tableau> std_decision(const RowClass& rc, Sign eps) {
    const int n = rc.n(), l = rc.l();
    auto cols = index_set(l);
    Grid g{n, l, {}};
    std::optional<Tableau> found;

    std::vector<int> neg_rows;
    for (int i = 1 - n; i <= -1; i += 2) neg_rows.push_back(i);

    std::function<void(size_t)> place = [&](size_t row_idx) {
        if (found) return;
        if (row_idx == neg_rows.size()) {
            if (n % 2 == 0) {
                if (final_checks_even_n(g, eps)) found = g.to_tableau();
                return;
            }
            // odd n: middle-column bullet, then the middle-row search
            if (n >= 3 && l % 2 != 0 &&
                !sum_nonneg_int(g.cells.at({-2, 0}), g.cells.at({-2, 0}), true))
                return;
            middle_row_arrangements(rc.row(0), l, [&](const std::vector<Number>& row0) {
                for (size_t c = 0; c < cols.size() && n >= 3; ++c) {
                    int j = cols[c];
                    if (j == 0) continue;
                    // a_{-2,j} > a_{0,j} and a_{0,j} > a_{2,j} = -a_{-2,-j}
                    if (!gt(g.cells.at({-2, j}), row0[c])) return false;
                    if (!sum_nonneg_int(row0[c], g.cells.at({-2, -j}), true)) return false;
                }
                Grid g2 = g;
                auto r0 = row0;
                g2.set_row(0, r0);
                found = g2.to_tableau();
                return true;
            });
            return;
        }
        int i = neg_rows[row_idx];
        std::vector<Number> vals = rc.row(i);
        std::sort(vals.begin(), vals.end());
        do {
            bool ok = true;
            // every column (middle included) is chained between consecutive
            // rows of the top half
            if (row_idx > 0)
                for (size_t c = 0; c < cols.size() && ok; ++c)
                    if (!gt(g.cells.at({i - 2, cols[c]}), vals[c])) ok = false;
            if (ok) {
                Grid saved = g;
                g.set_row(i, vals);
                place(row_idx + 1);
                g = std::move(saved);
                if (found) return;
            }
        } while (std::next_permutation(vals.begin(), vals.end()));
    };
    place(0);
    return found;
}

std::optional<Tableau> std_decision_brute(const RowClass& rc, Sign eps) {
    const int n = rc.n(), l = rc.l();
    auto cols = index_set(l);
    std::vector<int> neg_rows;
    for (int i = 1 - n; i <= -1; i += 2) neg_rows.push_back(i);

    Grid g{n, l, {}};
    std::optional<Tableau> found;
    std::function<void(size_t)> rec = [&](size_t row_idx) {
        if (found) return;
        if (row_idx == neg_rows.size()) {
            auto finish = [&](Grid filled) {
                Tableau t = filled.to_tableau();
                if (is_column_strict(t, eps)) found = t;
            };
            if (n % 2 == 0) {
                finish(g);
                return;
            }
            std::vector<Number> vals = rc.row(0);
            std::sort(vals.begin(), vals.end());
            do {
                // anti-palindromic check
                bool ok = true;
                for (size_t c = 0; c < cols.size() && ok; ++c) {
                    size_t cm = cols.size() - 1 - c;
                    if (!(vals[c] == -vals[cm])) ok = false;
                }
                if (!ok) continue;
                Grid g2 = g;
                g2.set_row(0, vals);
                finish(g2);
                if (found) return;
            } while (std::next_permutation(vals.begin(), vals.end()));
            return;
        }
        int i = neg_rows[row_idx];
        std::vector<Number> vals = rc.row(i);
        std::sort(vals.begin(), vals.end());
        do {
            Grid saved = g;
            g.set_row(i, vals);
            rec(row_idx + 1);
            g = std::move(saved);
            if (found) return;
        } while (std::next_permutation(vals.begin(), vals.end()));
    };
    rec(0);
    return found;
}

RowClass a_plus(const RowClass& rc) {
    if (rc.l() % 2 != 0) throw std::invalid_argument("a_plus: requires even l");
    const int n = rc.n();
    std::map<int, std::vector<Number>> rows;
    for (int i : index_set(n)) {
        if (i > 0) continue;
        int p = (i - (1 - n)) / 2; // 0-based position from the top
        Number mid;
        if (n % 2 == 0) {
            mid = p < n / 2 ? Number(Rational(n / 2 - 1 - p)) : Number(Rational(n / 2 - p));
        } else {
            mid = p < (n - 1) / 2 ? Number(Rational(n - 2 - 2 * p, 2)) : Number(0);
        }
        auto r = rc.row(i);
        r.push_back(mid);
        rows[i] = std::move(r);
    }
    return RowClass(n, rc.l() + 1, std::move(rows));
}

namespace {

void multisets_of(const std::vector<Number>& pool, int size,
                  const std::function<void(const std::vector<Number>&)>& sink) {
    std::vector<Number> cur;
    std::function<void(size_t)> rec = [&](size_t start) {
        if (static_cast<int>(cur.size()) == size) {
            sink(cur);
            return;
        }
        for (size_t k = start; k < pool.size(); ++k) {
            cur.push_back(pool[k]);
            rec(k);
            cur.pop_back();
        }
    };
    rec(0);
}

bool self_negating(std::vector<Number> v) {
    std::vector<Number> neg;
    for (const auto& x : v) neg.push_back(-x);
    std::sort(v.begin(), v.end());
    std::sort(neg.begin(), neg.end());
    return v == neg;
}

} // namespace

void enumerate_row_classes(int n, int l, const std::vector<Number>& pool,
                           const std::function<void(const RowClass&)>& sink) {
    std::vector<Number> distinct = pool;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    std::vector<int> stored_rows;
    for (int i = 1 - n; i <= -1; i += 2) stored_rows.push_back(i);
    bool has_middle = n % 2 != 0;

    std::map<int, std::vector<Number>> current;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == stored_rows.size()) {
            if (!has_middle) {
                sink(RowClass(n, l, current));
                return;
            }
            multisets_of(distinct, l, [&](const std::vector<Number>& mid) {
                if (!self_negating(mid)) return;
                auto rows = current;
                rows[0] = mid;
                sink(RowClass(n, l, rows));
            });
            return;
        }
        multisets_of(distinct, l, [&](const std::vector<Number>& row) {
            current[stored_rows[idx]] = row;
            rec(idx + 1);
            current.erase(stored_rows[idx]);
        });
    };
    rec(0);
}

std::vector<RowClass> enumerate_row_classes(int n, int l, const std::vector<Number>& pool) {
    std::vector<RowClass> out;
    enumerate_row_classes(n, l, pool, [&](const RowClass& rc) { out.push_back(rc); });
    return out;
}

} // namespace rectwalg
