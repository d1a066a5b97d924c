#pragma once

#include <optional>

#include "sls/code.hpp"
#include "sls/lattice.hpp"

namespace sls {

/// Rotated-layout planar surface code of odd distance d >= 3 (n = d^2).
/// The Z logical runs along the rightmost column, the X logical along the
/// top row.
SubsystemCode build_surface_code(int d);

/// Triangular (Steane-layout) color code; only d = 3 is implemented.
SubsystemCode build_color_code(int d);

/// Subsystem surface code unit cell; only L = 3 is implemented. 8 qubits on
/// [1,3]^2 with the central vertex unoccupied, gauge generators 4 triangles
/// plus 4 weight-2 boundary operators. Analyzes to (8,1,1). Bare logical
/// strings have weight 3; the dressed distance is 2 (a boundary Z string
/// times an adjacent Z triangle drops to weight 2) and no assignment of the
/// weight-2 boundary operators avoids this.
SubsystemCode build_subsystem_surface_code(int L);

/// Bacon-Shor code on an Lx x Ly grid: ZZ gauge operators on horizontal
/// neighbor pairs, XX on vertical pairs. (n,k,g) = (Lx*Ly, 1, (Lx-1)(Ly-1)).
SubsystemCode build_bacon_shor(int Lx, int Ly);

/// Smallest r such that every gauge generator's support fits an r x r
/// coordinate square. Requires geometry.
int interaction_range(const SubsystemCode& code);

/// Strip representative of the logical class (index, 'X' or 'Z') confined to
/// a vertical strip of width <= interaction_range at the given side, with
/// support ordered top to bottom. Rejects choices admitting a logical with
/// support strictly inside the strip string (the merge precondition).
std::optional<BoundaryLogical> boundary_logical(const SubsystemCode& code,
                                                const CodeAnalysis& analysis, Side side,
                                                std::size_t logical_index, char pauli);

/// Layout of a merged pair of lattices: A at the left, B shifted right of an
/// ancilla/seam column, total horizontal extent L_A + L_B + 1.
struct MergedLayout {
    Lattice2D lattice;                          // positions for all merged qubits
    std::vector<std::size_t> a_to_merged;       // index embeddings
    std::vector<std::size_t> b_to_merged;
    std::vector<std::size_t> q_a, q_b, q_c;     // ordered seam sets in merged indexing
    std::vector<Coord> ancilla_positions;
};

/// Places the two lattices side by side with a one-column seam and, when
/// requested, N-1 ancillas on the seam column aligned with Q_A's rows.
MergedLayout prepare_merged_lattice(const SubsystemCode& a, const BoundaryLogical& la,
                                    const SubsystemCode& b, const BoundaryLogical& lb,
                                    std::size_t ancilla_count);

}  // namespace sls
