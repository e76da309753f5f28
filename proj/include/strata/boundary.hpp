// boundary.hpp : principal boundary points of one-dimensional strata and the
// plumbing/contraction engine connecting them.
//
// A one-dimensional (projectivized) stratum is a disjoint union of open arcs
// ("equatorial arcs").  Each end of an arc is a two-level multi-scale
// differential whose levels are the zero-dimensional building blocks Z1/Z2
// (see blocks.hpp); the level transition is a collection of nodes, each
// matching a node zero of order kappa-1 on the top level with a node pole of
// order kappa+1 on the bottom level.  The combinatorial datum of a boundary
// point is:
//
//   * a type, recording which marked zeros and poles lie on which level and
//     how the residue blocks split (nine types across the four genus-0
//     families);
//   * an arrangement of the residueless poles (tau) split into level
//     segments by one or two cut indices (l1, l2);
//   * cylinder angles: one integer per residueless pole (Cvec) plus at most
//     one scalar angle C for a distinguished pole (the node pole or a
//     non-residueless pole absorbed into a level block);
//   * for the two-node types, a prong-matching class pr: the simultaneous
//     rotation at both nodes acts on prong matchings, and only the orbit is
//     part of the boundary datum.
//
// Arcs incident to a boundary point are indexed by prong matchings in
// half-integer steps: a node of enhancement kappa carries 2*kappa half-arcs.
// All half-integer bookkeeping is doubled: a half-arc label L represents the
// rotation L/2, so even L are the integer prong matchings and odd L the
// half-steps between them.
//
// The engine realizes a pointed boundary (point + label) as an actual flat
// surface on the adjacent arc (plumb), finds the two degenerate ends of that
// arc (arc_rays), and reads off the boundary datum at either end
// (recognize).  Walking an arc from one end to the other (u_move) is
// recognition at the far ray.  recognize always emits a canonical datum, so
// boundary points can be compared by equality.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "strata/diagram.hpp"
#include "strata/errors.hpp"
#include "strata/signature.hpp"

namespace strata {

// The nine principal boundary types of one-dimensional genus-0 strata.
//
//   B_I    : both zeros on the bottom level (a cycle surface with the node
//            pole), the residue pair on the top level (a chain surface whose
//            zero is the node zero).  One node.
//   B_IIIa : each zero on its own bottom chain surface, capped by one member
//            of the residue pair; the top level is a cycle surface joining
//            the two node zeros.  Two nodes.
//   B_IIIb : one zero and one member of the residue pair on the top level
//            (a cycle surface through the node zero), the other zero and
//            pair member on the bottom chain surface.  One node.
//   B_IIIc : one zero on the bottom chain surface together with the whole
//            residue pair; the node pole sits inside the chain; the other
//            zero is on the top cycle surface.  One node.
//   C_III  : two members of the residue triple cap the top chain surface
//            (whose zero is the node zero); the third caps the bottom chain
//            surface containing the marked zero.  One node.
//   D_IIIa : the marked zero on a bottom chain surface whose both ends are
//            node poles; two top chain surfaces, each capped by one member
//            of each residue pair.  Two nodes.
//   D_IIIb : one pair member on the bottom level; its partner sits inside
//            the top chain surface capped by the other pair.  One node.
//   D_IIIc : one residue pair caps the bottom chain surface (which carries
//            the marked zero and the node pole inside the chain), the other
//            pair caps the top chain surface.  One node.
//   A_I    : two zeros on the bottom cycle surface with the node pole, the
//            third zero on the top cycle surface with the node zero.  One
//            node.
enum class BType : std::uint8_t {
    B_I,
    B_IIIa,
    B_IIIb,
    B_IIIc,
    C_III,
    D_IIIa,
    D_IIIb,
    D_IIIc,
    A_I,
};

std::string btype_name(BType t);
int num_nodes(BType t);

// The combinatorial datum of a boundary point.  Residueless poles are
// referred to by their signature labels throughout: `tau` lists the labels in
// arrangement order, and Cvec[k] is the angle of the k-th residueless pole in
// label order (so Cvec is independent of tau).  The meaning of h, l1, l2 and
// the scalar C per type:
//
//   B_I    : h empty.  tau(1..l1) on the top chain (left to right from q1),
//            the rest on the bottom cycle before the node pole.  C = angle of
//            the node pole at z1; the z2-side angle is determined.
//   B_IIIa : h = {h1, h2}, the zero on the bottom component capped by q1 is
//            z_{h1}.  tau(1..l1) on bottom 1, tau(l1+1..l2) on the top cycle
//            (canonical rotation: smallest label first), the rest on bottom
//            2.  No scalar.  pr = canonical prong-matching class.
//   B_IIIb : h = {zero on top (1 or 2), pair pole on top (1 or 2)}.
//            tau(1..l1) on the bottom chain; the rest on the top cycle,
//            which also passes through the top pair pole with angle C on the
//            node-zero side.
//   B_IIIc : h = {zero on bottom, zero on top}.  tau(1..l1) before the node
//            pole on the bottom chain (from q1), tau(l1+1..l2) on the top
//            cycle (canonical rotation: smallest label first), the rest
//            after the node pole.  C = angle of the node pole on the
//            zero side.
//   C_III  : h = {h1, h2, h3} with h1 < h2: q_{h1}, q_{h2} cap the top
//            chain, q_{h3} the bottom chain.  tau(1..l1) on top (left to
//            right from q_{h1}), the rest on the bottom (left to right from
//            the node pole).  No scalar.
//   D_IIIa : h = {h1, h2} with {h1,h2} = {3,4}: top component 1 is capped by
//            (q1, q_{h1}), component 2 by (q_{h2}, q2).  tau(1..l1) on top 1,
//            tau(l1+1..l2) on top 2, the rest on the bottom.  No scalar.
//            pr = canonical prong-matching class.
//   D_IIIb : h = {h1, h2, h3, h4}: q_{h2} on the bottom chain (left end),
//            its partner q_{h1} inside the top chain with angle C on the
//            side toward q_{h3}; the other pair caps the top chain with
//            h3 < h4.  tau(1..l1) between q_{h3} and q_{h1}, tau(l1+1..l2)
//            between q_{h1} and q_{h4}, the rest on the bottom.
//   D_IIIc : h = {h1, h2, h3, h4} with h1 < h2, h3 < h4: pair {h1,h2} caps
//            the top chain, pair {h3,h4} the bottom chain, which contains
//            the node pole with angle C on the zero side.  tau(1..l1) on
//            top, tau(l1+1..l2) between q_{h3} and the node pole, the rest
//            after the node pole.
//   A_I    : h = {h1, h2, h3} with h1 < h2: zeros z_{h1}, z_{h2} on the
//            bottom cycle with the node pole (angle C at z_{h1}), z_{h3} on
//            the top cycle (canonical rotation: smallest label first among
//            tau(1..l1)).  tau(1..l1) on top, the rest on the bottom before
//            the node pole.
//
// kappa stores the node enhancement(s) (one entry per node); it is derived
// data kept for convenience.
struct BoundaryPoint {
    BType type{};
    std::vector<int> h;
    int l1 = 0;
    int l2 = 0;
    std::vector<int> tau;
    int C = 0;
    std::vector<int> Cvec;
    std::vector<int> kappa;
    std::array<int, 2> pr{0, 0};

    bool operator==(const BoundaryPoint&) const = default;
};

// Stable rendering of all fields, usable as a map key.
std::string key(const BoundaryPoint& bp);

// Throws ValidationError unless bp is structurally valid for sig (ranges,
// angle constraints, canonical-form requirements).
void validate_boundary(const Signature& sig, const BoundaryPoint& bp);

// All boundary points of the stratum, each exactly once in canonical form.
std::vector<BoundaryPoint> enumerate_boundaries(const Signature& sig);

// -------------------------------------------------------------------------
// Materialized form: the disconnected two-level separatrix diagram together
// with the data needed to splice the levels.  Per node we record the node
// zero vertex (top), an end anchoring the face circuit of the node pole face
// (bottom), and the threading frame: the circuit index A_idx of the prong
// where the distinguished incoming prong is glued at rotation zero, and the
// slot frame (s0, dir_top) of the labeled outgoing prongs on the top level,
// prong k sitting at slot s0 + 2*dir_top*k of the node zero.
// -------------------------------------------------------------------------

struct NodeFrame {
    int zero_vert = 0;
    int face_end = 0;
    int kappa = 0;
    int A_idx = 0;
    int s0 = 0;
    int dir_top = 0;
};

struct Model {
    Dia dia;                    // bottom edges cls 0, top edges cls 1
    std::vector<NodeFrame> nodes;
    std::vector<int> pole_end;  // per pole label: an end on that pole's face
    std::vector<int> zero_vert; // per zero label: its vertex
};

Model materialize(const Signature& sig, const BoundaryPoint& bp);

// A flat surface on the open arc adjacent to a boundary point: the connected
// separatrix diagram with the two parallel classes marked (cls 0 = the class
// shrinking toward the reference boundary point).
struct ArcSurface {
    Dia dia;
    std::vector<int> pole_end;
    std::vector<int> zero_vert;
};

// Splices the top level into the bottom along every node.  labels has one
// doubled half-arc label per node; all labels must share the same parity
// (the parity is the half-step epsilon, a common half-turn of the whole top
// level).  A node end at slot s of the node zero is threaded to circuit
// index A_idx - (s - s0 - dir_top*L) of the node pole face.
ArcSurface plumb(const Model& m, const std::vector<int>& labels);

// Residue-block indices of the faces of an arc surface, in faces() order,
// for the period lattice.
std::vector<int> face_blocks(const Signature& sig, const ArcSurface& s);

// The two degeneration rays of the arc, sorted into the one shrinking
// exactly the cls-0 edges (near: the reference boundary point) and the other
// one (far).
struct RayPair {
    std::vector<long long> near, far;
};
RayPair arc_rays(const Signature& sig, const ArcSurface& s);

// A pointed boundary: a boundary point plus the doubled label(s) of one
// half-arc at it.
struct PB {
    BoundaryPoint bp;
    std::vector<int> labels;

    bool operator==(const PB&) const = default;
};

// Reads off the boundary point at the end of the arc where the given ray
// degenerates, in canonical form, together with the label(s) of the arc as
// seen from that end.  Throws InconsistencyError when the arc does not
// degenerate to a recognizable principal boundary (an engine invariant
// violation).
PB recognize(const Signature& sig, const ArcSurface& s, const std::vector<long long>& ray);

// Canonical form of a raw pointed boundary: realize the arc and read the
// near end back.  For canonical input this is the identity.
PB canonical_point(const Signature& sig, const BoundaryPoint& bp, const std::vector<int>& labels);

// The other end of the half-arc: realize and read the far end.  An
// involution without fixed points on pointed boundaries.
PB u_move(const Signature& sig, const BoundaryPoint& bp, const std::vector<int>& labels);

// All half-arc labels at a boundary point: 2*kappa singletons for a one-node
// type, 2*lcm(kappa1, kappa2) pairs for a two-node type.
std::vector<std::vector<int>> star_labels(const BoundaryPoint& bp);

// The rotation move: advance every label by a half step (the two nodes of a
// two-node type rotate oppositely).
std::vector<int> r_move_label(const BoundaryPoint& bp, const std::vector<int>& labels);

// Canonical representative of the prong-matching class of (u, v) modulo the
// diagonal action (u, v) ~ (u + 1, v - 1): the representative with u = 0 and
// v smallest.
std::array<int, 2> canonical_prong_class(int u, int v, int k1, int k2);

} // namespace strata
