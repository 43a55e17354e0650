#pragma once

// Dense two-phase simplex over exact rationals, Bland's rule throughout.
//
//     maximize    c . x
//     subject to  A_eq x  = b_eq
//                 A_le x <= b_le
//                 x >= 0
//
// Pivot choice depends only on the input, so repeated solves return the same
// vertex of the optimal face.

#include <vector>

#include "tb/rational.hpp"

namespace tb {

struct LinearProgram {
    int num_vars = 0;
    std::vector<Rational> objective;  // size num_vars; missing entries are 0
    std::vector<std::vector<Rational>> eq_rows;
    std::vector<Rational> eq_rhs;
    std::vector<std::vector<Rational>> le_rows;
    std::vector<Rational> le_rhs;

    void add_eq(std::vector<Rational> row, Rational rhs);
    void add_le(std::vector<Rational> row, Rational rhs);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    std::vector<Rational> x;
};

LpResult solve_lp(const LinearProgram& lp);

}  // namespace tb
