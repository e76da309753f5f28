// blocks.hpp : the zero-dimensional building-block flat surfaces Z1 and Z2.
//
// Every level of a boundary point of a one-dimensional stratum is one of two
// kinds of genus-0 flat surface of projectivized dimension 0:
//
//   Z1(tau, C)            "cycle surface": two zeros z_A (order a1) and z_B
//     (order a2), n residueless poles arranged in a cyclic order tau, and n
//     parallel saddle connections from z_A to z_B cutting the surface into n
//     half-infinite cylinders, one per pole.  The cylinder at pole i subtends
//     angle 2*pi*C_i at z_A and 2*pi*D_i at z_B with D_i = b_i - C_i,
//     1 <= C_i <= b_i - 1, and sum C_i = a1 + 1 (hence sum D_i = a2 + 1 by the
//     degree relation a1 + a2 = sum b_i - 2).
//
//   Z2(tau, C, e1, e2)    "chain surface": one zero of order a, one pair of
//     poles q_L, q_R of orders e1, e2 whose (nonzero) residues cancel, and n
//     residueless poles in a linear order tau between them.  There are n+1
//     parallel saddle connections (all loops at the zero) cutting out a chain
//     of domains: the half-plane end of q_L, one cylinder per residueless
//     pole, the half-plane end of q_R.  The cylinder at pole i subtends angle
//     2*pi*C_i on one side and 2*pi*D_i on the other; here the C_i are
//     unconstrained beyond 1 <= C_i <= b_i - 1 and the degree relation reads
//     a = e1 + e2 + sum b_i - 2.
//
// Angles are stored as the integers C_i (full-turn counts); all half-integer
// bookkeeping lives in the net module, which doubles everything.
//
// Poles carry 1-based local labels 1..n; `tau` is the arrangement as a
// sequence of labels, and C is indexed BY LABEL (C[i-1] belongs to pole i, no
// matter where tau places it).  A disconnected level made of several chain
// surfaces linked through their residue pairs is represented downstream as an
// ordered list of ChainSurface values (residue of the right pole of one
// component cancels the left pole of the next).
#pragma once

#include <vector>

#include "strata/errors.hpp"

namespace strata {

struct CycleSurface {
    int a1 = 0, a2 = 0;
    std::vector<int> b;   // pole orders by label
    std::vector<int> tau; // cyclic arrangement of labels 1..n, canonical
                          // rotation puts label 1 first
    std::vector<int> C;   // C[i-1] = angle at z_A of pole i's cylinder

    int n() const { return static_cast<int>(b.size()); }
    int D(int label) const {
        return b.at(static_cast<size_t>(label) - 1) - C.at(static_cast<size_t>(label) - 1);
    }
    bool operator==(const CycleSurface&) const = default;
};

struct ChainSurface {
    int a = 0;
    int e1 = 0, e2 = 0;   // orders of the residue pair (left, right end)
    std::vector<int> b;   // residueless pole orders by label
    std::vector<int> tau; // linear arrangement of labels 1..n, left to right
    std::vector<int> C;   // C[i-1] = angle on the distinguished side of pole i

    int n() const { return static_cast<int>(b.size()); }
    int D(int label) const {
        return b.at(static_cast<size_t>(label) - 1) - C.at(static_cast<size_t>(label) - 1);
    }
    bool operator==(const ChainSurface&) const = default;
};

// Throw ValidationError unless all structural invariants above hold.
void validate(const CycleSurface& z);
void validate(const ChainSurface& z);

// All cycle surfaces with the given data, each exactly once: cyclic orders up
// to rotation (canonicalized with label 1 first) times admissible angle
// tuples.  Empty list when no angle tuple exists.  Requires
// a1 + a2 = sum(b) - 2 and a1, a2 >= 0, n >= 1.
std::vector<CycleSurface> enumerate_z1(int a1, int a2, const std::vector<int>& pole_orders);

// All chain surfaces with the given data: every linear order times every
// in-range angle tuple.  Requires a = e1 + e2 + sum(b) - 2, e1, e2 >= 1.
std::vector<ChainSurface> enumerate_z2(int a, const std::vector<int>& residueless_orders,
                                       int e1, int e2);

} // namespace strata
