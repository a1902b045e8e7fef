#include "torembed/lp.hpp"

#include <optional>
#include <stdexcept>

namespace torembed {

namespace {

// Tableau with the objective in the last row and the right-hand side in the
// last column. basis[r] is the variable basic in row r.
struct Tableau {
    RatMatrix t;
    std::vector<std::size_t> basis;

    std::size_t rows() const { return t.rows() - 1; }
    std::size_t vars() const { return t.cols() - 1; }

    void pivot(std::size_t pr, std::size_t pc) {
        Rational inv = 1 / t(pr, pc);
        for (std::size_t k = 0; k < t.cols(); ++k) t(pr, k) *= inv;
        for (std::size_t r = 0; r < t.rows(); ++r) {
            if (r == pr || t(r, pc) == 0) continue;
            Rational f = t(r, pc);
            for (std::size_t k = 0; k < t.cols(); ++k)
                if (t(pr, k) != 0) t(r, k) -= f * t(pr, k);
        }
        basis[pr] = pc;
    }

    // Runs Bland's rule over columns [0, limit). Returns false when unbounded.
    bool run(std::size_t limit) {
        const std::size_t obj = rows();
        while (true) {
            std::optional<std::size_t> enter;
            for (std::size_t c = 0; c < limit; ++c)
                if (t(obj, c) < 0) {
                    enter = c;
                    break;
                }
            if (!enter) return true;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t r = 0; r < rows(); ++r) {
                if (t(r, *enter) <= 0) continue;
                Rational ratio = t(r, vars()) / t(r, *enter);
                if (!leave || ratio < best || (ratio == best && basis[r] < basis[*leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (!leave) return false;
            pivot(*leave, *enter);
        }
    }
};

}  // namespace

LpResult simplex_minimize(const RatMatrix& a, const RatVector& b, const RatVector& c) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (b.size() != m || c.size() != n) throw std::invalid_argument("simplex: shape mismatch");

    // Phase 1: artificial variables n..n+m-1 with b >= 0.
    Tableau tab{RatMatrix(m + 1, n + m + 1), std::vector<std::size_t>(m)};
    for (std::size_t r = 0; r < m; ++r) {
        const bool flip = b[r] < 0;
        for (std::size_t k = 0; k < n; ++k) tab.t(r, k) = flip ? Rational(-a(r, k)) : a(r, k);
        tab.t(r, n + r) = 1;
        tab.t(r, n + m) = flip ? Rational(-b[r]) : b[r];
        tab.basis[r] = n + r;
    }
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n + m; ++k)
            if (k < n || k == n + m) tab.t(m, k) -= tab.t(r, k);
    tab.run(n + m);

    LpResult result;
    if (tab.t(m, n + m) != 0) {
        result.status = LpStatus::Infeasible;
        return result;
    }

    // Drive remaining artificials out of the basis; drop redundant rows.
    std::vector<std::size_t> keep;
    for (std::size_t r = 0; r < m; ++r) {
        if (tab.basis[r] >= n) {
            std::optional<std::size_t> col;
            for (std::size_t k = 0; k < n; ++k)
                if (tab.t(r, k) != 0) {
                    col = k;
                    break;
                }
            if (!col) continue;
            tab.pivot(r, *col);
        }
        keep.push_back(r);
    }

    Tableau phase2{RatMatrix(keep.size() + 1, n + 1), std::vector<std::size_t>(keep.size())};
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (std::size_t k = 0; k < n; ++k) phase2.t(i, k) = tab.t(keep[i], k);
        phase2.t(i, n) = tab.t(keep[i], n + m);
        phase2.basis[i] = tab.basis[keep[i]];
    }
    const std::size_t obj = keep.size();
    for (std::size_t k = 0; k < n; ++k) phase2.t(obj, k) = c[k];
    for (std::size_t i = 0; i < keep.size(); ++i) {
        const Rational cb = c[phase2.basis[i]];
        if (cb == 0) continue;
        for (std::size_t k = 0; k <= n; ++k) phase2.t(obj, k) -= cb * phase2.t(i, k);
    }
    if (!phase2.run(n)) {
        result.status = LpStatus::Unbounded;
        return result;
    }
    result.status = LpStatus::Optimal;
    result.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < keep.size(); ++i) result.x[phase2.basis[i]] = phase2.t(i, n);
    result.value = -phase2.t(obj, n);
    return result;
}

void LinearProgram::add_row(RatVector coeffs, Sense sense, Rational rhs) {
    if (coeffs.size() != num_vars_) throw std::invalid_argument("LinearProgram: row length mismatch");
    rows_.push_back({std::move(coeffs), sense, std::move(rhs)});
}

LpResult LinearProgram::minimize() const {
    // Column layout: one column per nonnegative variable, two per free
    // variable (x = x+ - x-), then one slack per inequality row.
    std::vector<std::size_t> pos(num_vars_);
    std::size_t cols = 0;
    for (std::size_t v = 0; v < num_vars_; ++v) {
        pos[v] = cols;
        cols += free_[v] ? 2 : 1;
    }
    const std::size_t structural = cols;
    for (const auto& row : rows_)
        if (row.sense != Sense::Eq) ++cols;

    RatMatrix a(rows_.size(), cols);
    RatVector b(rows_.size());
    std::size_t slack = structural;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Row& row = rows_[r];
        for (std::size_t v = 0; v < num_vars_; ++v) {
            a(r, pos[v]) = row.coeffs[v];
            if (free_[v]) a(r, pos[v] + 1) = -row.coeffs[v];
        }
        if (row.sense == Sense::LessEq) a(r, slack++) = 1;
        if (row.sense == Sense::GreaterEq) a(r, slack++) = -1;
        b[r] = row.rhs;
    }
    RatVector c(cols);
    if (!objective_.empty()) {
        if (objective_.size() != num_vars_) throw std::invalid_argument("LinearProgram: objective length mismatch");
        for (std::size_t v = 0; v < num_vars_; ++v) {
            c[pos[v]] = objective_[v];
            if (free_[v]) c[pos[v] + 1] = -objective_[v];
        }
    }

    LpResult raw = simplex_minimize(a, b, c);
    LpResult out;
    out.status = raw.status;
    if (raw.status != LpStatus::Optimal) return out;
    out.value = raw.value;
    out.x.resize(num_vars_);
    for (std::size_t v = 0; v < num_vars_; ++v)
        out.x[v] = free_[v] ? Rational(raw.x[pos[v]] - raw.x[pos[v] + 1]) : raw.x[pos[v]];
    return out;
}

}  // namespace torembed
