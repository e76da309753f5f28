// diagram.hpp : separatrix diagrams of flat surfaces with all saddle
// connections parallel, as decorated combinatorial maps.
//
// A separatrix diagram is a ribbon graph whose vertices are the zeros of the
// differential, whose edges are the (horizontal) saddle connections, and
// whose faces are in bijection with the poles.  The angle between adjacent
// half-edges is recorded in half-turn units: a zero of order a has cone angle
// 2*pi*(a+1), so its direction circle carries 2(a+1) discrete slots, one per
// half-turn.  Each half-edge end occupies one slot; corner angles are the
// slot gaps, so no separate angle labels are needed.  Slot parity is global:
// the horizontal direction orients every edge, and the two ends of an edge
// always occupy slots of opposite parity (one end points east, the other
// west).  Rotating the slots of a single vertex is a gauge freedom (the
// direction circle at a cone point has no marked origin); all structure is in
// the slot differences and the pairing.
//
// Two derived angle identities serve as validation invariants:
//   * the slot count at a zero of order a is 2(a+1);
//   * a face whose boundary walk has k corners with half-turn gaps g_1..g_k
//     surrounds a pole of order b with sum(g_i) = k + 2(b-1).
//
// The same structure describes both the open strata (a single surface whose
// saddle connections split into two parallel classes) and the two-level
// boundary points (a disconnected diagram with unmarked node zeros on the
// top-level components and unmarked node poles among the bottom-level
// faces).  Which situation a Dia value represents is decided by its owner;
// this module provides the neutral operations: stars, face walks, face
// circuits (the discrete circle of interior directions around a pole), the
// period lattice, and the standard layouts of the two building-block
// surfaces.
#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "strata/errors.hpp"

namespace strata {

struct DiaVertex {
    int order = 0; // order of the zero carried by this vertex
    int zero = 0;  // 1-based marked zero label, or 0 for an unmarked node zero

    int slots() const { return 2 * (order + 1); }
};

// cls distinguishes the two parallel saddle-connection classes on an open
// equatorial arc: 0 for the class that shrinks toward the reference boundary
// point (its bottom level), 1 for the surviving class (its top level).
struct DiaEdge {
    std::array<int, 2> vert{};
    std::array<int, 2> slot{};
    int cls = 0;
};

// A half-edge end is addressed as 2*edge + side.
inline int end_edge(int h) { return h >> 1; }
inline int end_side(int h) { return h & 1; }
inline int end_twin(int h) { return h ^ 1; }
inline int make_end(int edge, int side) { return 2 * edge + side; }

struct Dia {
    std::vector<DiaVertex> verts;
    std::vector<DiaEdge> edges;

    int vertex_of(int h) const { return edges[static_cast<size_t>(end_edge(h))].vert[static_cast<size_t>(end_side(h))]; }
    int slot_of(int h) const { return edges[static_cast<size_t>(end_edge(h))].slot[static_cast<size_t>(end_side(h))]; }
    int num_ends() const { return 2 * static_cast<int>(edges.size()); }

    int add_vertex(int order, int zero) {
        verts.push_back({order, zero});
        return static_cast<int>(verts.size()) - 1;
    }
    // Adds an edge and returns its index; slots are normalized per vertex.
    int add_edge(int v0, int s0, int v1, int s1, int cls);
    void move_end(int h, int v, int slot);
};

// Occupied slots at a vertex, as (slot, end) pairs sorted by slot.
std::vector<std::pair<int, int>> star(const Dia& dia, int v);

// The end at the next occupied slot strictly after `slot` at vertex v,
// cyclically (increasing slot order).  Requires the vertex to have at least
// one end.
int next_end_after(const Dia& dia, int v, int slot);
// Likewise the previous occupied slot strictly before `slot`.
int prev_end_before(const Dia& dia, int v, int slot);

// Faces of the diagram via the successor walk: the successor of an end e is
// the end at the next occupied slot after twin(e) at twin(e)'s vertex.  Each
// end lies on exactly one face.  Faces are returned as lists of ends in walk
// order.
std::vector<std::vector<int>> faces(const Dia& dia);

// Sum of the corner gaps of a face given as an end list (walk order), in
// half-turn units; the pole order of the face is then
// (sum - corners)/2 + 1.
int face_gap_sum(const Dia& dia, const std::vector<int>& face);
int face_pole_order(const Dia& dia, const std::vector<int>& face);

// The face circuit through the interior (unoccupied) direction slots of the
// face containing the end h0: starting just below h0's slot and walking in
// decreasing slot order, jumping across edges through their twins.  A face
// around a pole of order b has exactly 2(b-1) interior positions.  The
// returned positions are (vertex, slot) pairs; position parities alternate.
std::vector<std::pair<int, int>> face_circuit(const Dia& dia, int h0);

// -------------------------------------------------------------------------
// Period lattice.  All saddle connections are parallel, so every edge period
// is a real multiple of a common direction; the face walks impose one linear
// relation per residueless pole (the boundary periods sum to zero) and one
// relation per residue block (the residues of its poles sum to zero).  The
// solution space of these relations has dimension 1 for a rigid
// (zero-dimensional) surface and dimension 2 on an open equatorial arc.
//
// Residue blocks are described by grouping the faces: face_block[f] gives
// the block index of face f (faces listed in faces() order), where each
// residueless pole forms its own block.
// -------------------------------------------------------------------------

// Per-edge period vectors spanning the solution space: result[e] is the
// coordinate vector of edge e's period in a basis of the nullspace (entries
// are exact rationals scaled to a common integer form).  The dimension of
// the nullspace is result[0].size().  Orientation convention: every edge is
// measured from its even-slot end to its odd-slot end, which points along
// the common direction, so on a realized surface all periods are positive.
std::vector<std::vector<long long>> period_lattice(const Dia& dia,
                                                   const std::vector<int>& face_block);

// The two extreme rays of the positivity cone {v in nullspace : all edge
// periods >= 0} of a 2-dimensional period lattice.  Each ray is returned as
// the list of per-edge periods (non-negative integers, not all zero, with
// the zero set marking the saddle connections that shrink at that end of the
// arc).  Throws DegenerateDiagramError when the lattice is not
// 2-dimensional or the cone is degenerate.
std::array<std::vector<long long>, 2> degeneration_rays(const Dia& dia,
                                                        const std::vector<int>& face_block);

// Throws ValidationError unless the structural invariants hold: slots in
// range and pairwise distinct per vertex, and each edge has one even and one
// odd end.
void validate(const Dia& dia);

// -------------------------------------------------------------------------
// Standard layouts of the building-block surfaces.  Both attach new edges to
// existing vertices of `dia` and report which ends represent the saddle
// connections, so the caller can locate pole faces and prong anchors.
// -------------------------------------------------------------------------

// Cycle-surface layout: p >= 1 poles in cyclic order with angles
// (C_1,...,C_p) at vA (full turns, sum = order(vA)/... = a1+1) and
// D_i = b_i - C_i at vB.  Creates p edges gamma_1..gamma_p, where gamma_i
// runs from vA to vB and pole i sits between gamma_{i-1} and gamma_i.  The
// out-end of gamma_i is placed at vA slot 2(C_1+...+C_i); the in-end at vB
// slot -1 - 2(D_1+...+D_i).  Returns the edge indices gamma_1..gamma_p.
// The face of pole i consists of the ends {out gamma_i, in gamma_{i-1}}.
std::vector<int> layout_z1(Dia& dia, int vA, int vB, const std::vector<int>& C,
                           const std::vector<int>& D, int cls);

// Chain-surface layout: a single vertex zv with p >= 0 chained poles between
// a left end pole of order eL and a right end pole of order eR.  Creates
// p+1 loop edges alpha_0..alpha_p at zv: the out-end of alpha_i at slot
// 2(C_1+...+C_i) and the in-end at slot 1 - 2(eL + D_1+...+D_i).  The face
// of chain pole i is {out alpha_i, in alpha_{i-1}}; the left pole face is
// {out alpha_0}; the right pole face is {in alpha_p}.  Returns the edge
// indices alpha_0..alpha_p.
std::vector<int> layout_z2(Dia& dia, int zv, const std::vector<int>& C,
                           const std::vector<int>& D, int eL, int cls);

} // namespace strata
