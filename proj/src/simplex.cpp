#include "tb/simplex.hpp"

#include <stdexcept>

namespace tb {

void LinearProgram::add_eq(std::vector<Rational> row, Rational rhs) {
    row.resize(static_cast<std::size_t>(num_vars));
    eq_rows.push_back(std::move(row));
    eq_rhs.push_back(rhs);
}

void LinearProgram::add_le(std::vector<Rational> row, Rational rhs) {
    row.resize(static_cast<std::size_t>(num_vars));
    le_rows.push_back(std::move(row));
    le_rhs.push_back(rhs);
}

namespace {

class Tableau {
public:
    // rows x (cols + 1); last column is the right-hand side.
    std::vector<std::vector<Rational>> a;
    std::vector<int> basis;
    int cols = 0;

    Rational& rhs(std::size_t r) { return a[r][static_cast<std::size_t>(cols)]; }

    void pivot(std::size_t r, int c) {
        const auto cc = static_cast<std::size_t>(c);
        const Rational p = a[r][cc];
        for (auto& v : a[r])
            if (!v.is_zero()) v /= p;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][cc].is_zero()) continue;
            const Rational f = a[i][cc];
            for (std::size_t j = 0; j <= static_cast<std::size_t>(cols); ++j)
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
        }
        basis[r] = c;
    }

    // Maximise obj . x over columns [0, allowed). Returns false when unbounded.
    bool optimise(const std::vector<Rational>& obj, int allowed) {
        for (;;) {
            // Reduced cost of column j: obj_j - sum_r obj_{basis r} a[r][j].
            int enter = -1;
            for (int j = 0; j < allowed && enter < 0; ++j) {
                Rational reduced = obj[static_cast<std::size_t>(j)];
                for (std::size_t r = 0; r < a.size(); ++r) {
                    const auto& cb = obj[static_cast<std::size_t>(basis[r])];
                    if (!cb.is_zero() && !a[r][static_cast<std::size_t>(j)].is_zero()) reduced -= cb * a[r][static_cast<std::size_t>(j)];
                }
                if (reduced.sign() > 0) enter = j;
            }
            if (enter < 0) return true;
            std::size_t leave = a.size();
            Rational best;
            for (std::size_t r = 0; r < a.size(); ++r) {
                const Rational& coef = a[r][static_cast<std::size_t>(enter)];
                if (coef.sign() <= 0) continue;
                Rational ratio = rhs(r) / coef;
                if (leave == a.size() || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == a.size()) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
    const int n = lp.num_vars;
    const int n_le = static_cast<int>(lp.le_rows.size());
    const int n_rows = static_cast<int>(lp.eq_rows.size()) + n_le;
    // Columns: originals, one slack per <= row, one artificial per row.
    const int n_struct = n + n_le;
    Tableau t;
    t.cols = n_struct + n_rows;
    t.a.assign(static_cast<std::size_t>(n_rows), std::vector<Rational>(static_cast<std::size_t>(t.cols + 1)));
    t.basis.assign(static_cast<std::size_t>(n_rows), 0);
    auto fill = [&](std::size_t r, const std::vector<Rational>& row, Rational b, int slack) {
        if (row.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("solve_lp: row width mismatch");
        const bool flip = b.sign() < 0;
        for (int j = 0; j < n; ++j) t.a[r][static_cast<std::size_t>(j)] = flip ? -row[static_cast<std::size_t>(j)] : row[static_cast<std::size_t>(j)];
        if (slack >= 0) t.a[r][static_cast<std::size_t>(slack)] = Rational(flip ? -1 : 1);
        t.rhs(r) = flip ? -b : b;
        const int art = n_struct + static_cast<int>(r);
        t.a[r][static_cast<std::size_t>(art)] = Rational(1);
        t.basis[r] = art;
    };
    std::size_t r = 0;
    for (std::size_t i = 0; i < lp.eq_rows.size(); ++i, ++r) fill(r, lp.eq_rows[i], lp.eq_rhs[i], -1);
    for (std::size_t i = 0; i < lp.le_rows.size(); ++i, ++r) fill(r, lp.le_rows[i], lp.le_rhs[i], n + static_cast<int>(i));

    // Phase one: maximise minus the sum of artificials.
    std::vector<Rational> phase1(static_cast<std::size_t>(t.cols));
    for (int j = n_struct; j < t.cols; ++j) phase1[static_cast<std::size_t>(j)] = Rational(-1);
    t.optimise(phase1, t.cols);
    for (std::size_t i = 0; i < t.a.size(); ++i)
        if (t.basis[i] >= n_struct && !t.rhs(i).is_zero()) return {LpStatus::Infeasible, {}, {}};

    // Drive zero-level artificials out of the basis; rows where that is
    // impossible are linear combinations of the others.
    for (std::size_t i = 0; i < t.a.size();) {
        if (t.basis[i] < n_struct) {
            ++i;
            continue;
        }
        int col = -1;
        for (int j = 0; j < n_struct && col < 0; ++j)
            if (!t.a[i][static_cast<std::size_t>(j)].is_zero()) col = j;
        if (col >= 0) {
            t.pivot(i, col);
            ++i;
        } else {
            t.a.erase(t.a.begin() + static_cast<std::ptrdiff_t>(i));
            t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }

    std::vector<Rational> obj(static_cast<std::size_t>(t.cols));
    for (int j = 0; j < n && j < static_cast<int>(lp.objective.size()); ++j) obj[static_cast<std::size_t>(j)] = lp.objective[static_cast<std::size_t>(j)];
    if (!t.optimise(obj, n_struct)) return {LpStatus::Unbounded, {}, {}};

    LpResult res;
    res.status = LpStatus::Optimal;
    res.x.assign(static_cast<std::size_t>(n), Rational{});
    for (std::size_t i = 0; i < t.a.size(); ++i)
        if (t.basis[i] < n) res.x[static_cast<std::size_t>(t.basis[i])] = t.rhs(i);
    for (int j = 0; j < n; ++j) res.value += obj[static_cast<std::size_t>(j)] * res.x[static_cast<std::size_t>(j)];
    return res;
}

}  // namespace tb
