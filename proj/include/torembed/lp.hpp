#pragma once

#include <vector>

#include "torembed/linalg.hpp"

namespace torembed {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    RatVector x;     // primal solution (standard-form variables) when Optimal
    Rational value;  // objective value when Optimal
};

/// Exact two-phase simplex over the rationals with Bland's rule:
///   minimize c.x  subject to  A x = b,  x >= 0.
/// Deterministic for fixed input.
LpResult simplex_minimize(const RatMatrix& a, const RatVector& b, const RatVector& c);

enum class Sense { LessEq, Eq, GreaterEq };

/// Convenience front end for problems with free variables and mixed row
/// senses. Free variables are split internally; `x` in the result is in the
/// caller's variable space.
class LinearProgram {
public:
    explicit LinearProgram(std::size_t num_vars) : num_vars_(num_vars), free_(num_vars, true) {}

    void set_nonnegative(std::size_t var) { free_.at(var) = false; }
    void add_row(RatVector coeffs, Sense sense, Rational rhs);
    void set_objective(RatVector c) { objective_ = std::move(c); }

    LpResult minimize() const;

private:
    struct Row {
        RatVector coeffs;
        Sense sense;
        Rational rhs;
    };
    std::size_t num_vars_;
    std::vector<bool> free_;
    std::vector<Row> rows_;
    RatVector objective_;
};

}  // namespace torembed
