#pragma once

// Surfaces assembled from disc pieces in the tetrahedra of a triangulation,
// and the combinatorial Gauss-Bonnet identity  sum of areas = -2 chi.
//
// Arcs are matched across each glued pair of hexagons by type: the i-th arc
// of a given type on one side (pieces in list order) is matched with the i-th
// arc of the image type on the other side.

#include <stdexcept>
#include <string>
#include <vector>

#include "tb/angles.hpp"
#include "tb/discs.hpp"
#include "tb/triangulation.hpp"

namespace tb {

struct GaussBonnetViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct AssemblyPiece {
    int tet = 0;
    DiscType disc;
};

struct SurfaceAssembly {
    std::vector<AssemblyPiece> pieces;
};

struct CellCounts {
    int vertices = 0;  // points on interior edge classes and on boundary edges
    int edges = 0;     // arcs in interior faces (shared) and in boundary faces
    int faces = 0;     // discs
    int euler() const { return vertices - edges + faces; }
};

// Unmatched arcs across glued faces and crossing counts that differ around an
// edge class.
std::vector<std::string> assembly_defects(const Triangulation& t, const SurfaceAssembly& s);
CellCounts cell_counts(const Triangulation& t, const SurfaceAssembly& s);
int assembly_components(const Triangulation& t, const SurfaceAssembly& s);
// No arcs in boundary faces.
bool is_closed(const SurfaceAssembly& s);

SurfaceAssembly assemble_vertex_link_surface(const Triangulation& t);
// Two disjoint copies of every piece.
SurfaceAssembly doubled(const SurfaceAssembly& s);
// The annulus around an edge class: one bigon at each of its corners.
SurfaceAssembly edge_annulus(const EdgeClass& e);

// Closed surfaces with at most one quad type per tetrahedron (multiplicity at
// most one) and each vertex link at most once, found by matching arcs face by
// face. The empty surface is skipped; at most `limit` results.
std::vector<SurfaceAssembly> find_normal_assemblies(const Triangulation& t, std::size_t limit = 1000);

struct GaussBonnetReport {
    CellCounts counts;
    Rational total_area;
};

// Throws GaussBonnetViolation if the total area differs from -2 chi, and
// std::invalid_argument if the assembly has defects.
GaussBonnetReport gauss_bonnet_check(const Triangulation& t, const SurfaceAssembly& s, const AngleAssignment& a);

}  // namespace tb
