#pragma once

// Angle structures in units of pi: theta = 1 is a straight angle, and the
// exterior angle at a corner is 1 - theta. Variable index for corner
// (tet, edge) is 6 * tet + edge, edges indexed as in triangulation.hpp.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "tb/rational.hpp"
#include "tb/triangulation.hpp"

namespace tb {

struct TooLarge : std::length_error {
    using std::length_error::length_error;
};

enum class EquationKind { Edge, Vertex, Other };

struct LinearEquation {
    std::vector<std::pair<int, Rational>> terms;  // (variable, coefficient)
    Rational rhs;
    EquationKind kind = EquationKind::Other;
    std::string label;

    Rational evaluate(const std::vector<Rational>& x) const;
};

struct ConstraintSystem {
    int num_vars = 0;
    std::vector<LinearEquation> equalities;
    // Open bounds 0 < x < 1 on every variable are implicit.
    std::vector<std::string> remarks;

    int count(EquationKind k) const;
};

// One equality per edge class (sum = 2) and per tetrahedron vertex (sum = 1).
ConstraintSystem build_constraints(const Triangulation& t);

// The four vertex equalities of a single tetrahedron.
ConstraintSystem single_tetrahedron_system();

struct AngleAssignment {
    std::vector<std::array<Rational, 6>> theta;

    static AngleAssignment uniform(int tets, Rational value);
    static AngleAssignment from_flat(const std::vector<Rational>& x);
    std::vector<Rational> flat() const;
    int size() const { return static_cast<int>(theta.size()); }
    Rational exterior(int tet, int edge) const { return Rational(1) - theta[static_cast<std::size_t>(tet)][static_cast<std::size_t>(edge)]; }
};

// Boundary of an ideal polyhedron as a graph on the sphere. Faces list their
// edges in cyclic order.
struct PolyhedronPattern {
    int num_vertices = 0;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::vector<int>> faces;

    static PolyhedronPattern tetrahedron();
    static PolyhedronPattern prism(int k);  // two k-gons joined by quadrilaterals
};

struct NormalCurveClass {
    std::vector<int> edges;  // sorted, each crossed once
    std::vector<std::array<int, 3>> arcs;  // (face, edge, edge) per arc
    bool vertex_linking = false;
};

inline constexpr int kMaxPatternEdges = 16;

// Every simple closed curve on the boundary crossing each edge at most once,
// missing the vertices and crossing at least one edge. Throws TooLarge above
// kMaxPatternEdges edges.
std::vector<NormalCurveClass> enumerate_normal_curves(const PolyhedronPattern& p);

enum class SolveStatus { Feasible, Infeasible };

struct MaxMinResult {
    SolveStatus status = SolveStatus::Infeasible;
    Rational slack;
    AngleAssignment assignment;
    bool feasible() const { return status == SolveStatus::Feasible; }
};

// Maximises eps subject to the equalities and eps <= x <= 1 - eps. Infeasible
// when the optimum eps is 0 or the system has no solution in [0, 1]. Variables
// are grouped six to a tetrahedron in the returned assignment.
MaxMinResult solve_max_min(const ConstraintSystem& c);

struct AssignmentReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

AssignmentReport check_assignment(const Triangulation& t, const AngleAssignment& a);

}  // namespace tb
