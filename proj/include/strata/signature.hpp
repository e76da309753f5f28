// signature.hpp : signatures mu^R of generalized strata and their basic
// combinatorial invariants.
//
// A signature records the orders of the marked zeros and poles of a
// meromorphic 1-form on a genus-g curve together with a residue condition: a
// partition of the poles into blocks, the residues in each block summing to
// zero.  Pole orders are stored as positive integers (the divisor coefficient
// of pole j is -b_j).  Poles are labeled 1..n in storage order and all
// downstream combinatorics act on those labels, never on multisets.
//
// The projectivized dimension of the stratum is 2g + m + n - |R| - 2.  This
// artifact is concerned with the one-dimensional case, which splits into five
// families according to the shape of (g, m, partition):
//
//   A : g=0, three zeros, all blocks singletons.
//   B : g=0, two zeros, one pair block + singletons.
//   C : g=0, one zero, one triple block + singletons.
//   D : g=0, one zero, two pair blocks + singletons.
//   E : g=1, one zero, all blocks singletons (classified in prior work;
//       excluded here).
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strata/errors.hpp"

namespace strata {

enum class Family : std::uint8_t { A, B, C, D, E, NotOneDimensional };

std::string family_name(Family f);

struct Signature {
    int genus = 0;
    std::vector<int> zeros;              // a_1..a_m, each >= 0
    std::vector<int> poles;              // b_1..b_n, each >= 1 (order of pole)
    std::vector<std::vector<int>> blocks; // partition of pole labels 1..n

    int m() const { return static_cast<int>(zeros.size()); }
    int n() const { return static_cast<int>(poles.size()); }
    int r() const { return static_cast<int>(blocks.size()); }

    // Order of pole with 1-based label j.
    int pole_order(int j) const { return poles.at(static_cast<size_t>(j) - 1); }

    bool operator==(const Signature&) const = default;
};

// A ramification profile is an involution S on the pole labels such that
//   (i)   S preserves pole orders and fixed poles have even order,
//   (ii)  S fixes at most 2g+1 poles if there is a unique zero, at most 2g+2
//         if there are two equal zeros (profiles exist only in those cases),
//   (iii) S is compatible with the residue condition: for every j, either
//         {j, S(j)} is a block, or both {j} and {S(j)} are singleton blocks.
// Profiles classify hyperelliptic components: one component per profile.
struct RamificationProfile {
    std::vector<int> image; // image[j-1] = S(j), 1-based labels

    int apply(int j) const { return image.at(static_cast<size_t>(j) - 1); }
    std::vector<int> fixed_poles() const;

    bool operator==(const RamificationProfile&) const = default;
};

// Throws ValidationError when a structural invariant fails (degree relation,
// partition not covering, lone simple-pole block, ...).
void validate(const Signature& sig);

// Parses the textual form `[g=<int>;] zeros ('|' part)+`, e.g.
// "1,1 | -2 | -1,-1".  Zeros are comma-separated non-negative integers; each
// part lists the (negative) divisor coefficients of one residue block.
Signature parse_signature(const std::string& text);

// Canonical rendering: single spaces around '|', "g=<k>; " prefix only when
// the genus is nonzero.  parse_signature(render(sig)) == sig.
std::string render(const Signature& sig);

// Projectivized dimension 2g + m + n - |R| - 2.
int dimension(const Signature& sig);

// Family per the one-dimensional classification; NotOneDimensional when the
// dimension differs from 1.
Family classify_one_dim(const Signature& sig);

// All ramification profiles, duplicate-free.  Empty unless the signature has
// a unique zero or exactly two zeros of equal order.
std::vector<RamificationProfile> ramification_profiles(const Signature& sig);

// ---------------------------------------------------------------------------
// Family views: the B/C/D(/A) sections of the classification use a normalized
// naming of the poles (residueless singletons p_i with orders b_i; the
// non-residueless pair/triple members q_j with orders e_j).  A view maps that
// naming back to the signature's pole labels.
// ---------------------------------------------------------------------------

// B: mu^R = (a1,a2 | -e1,-e2 | -b_1 | ... | -b_{n-2}), e1 <= e2.
struct BView {
    int a1 = 0, a2 = 0;   // zero orders in storage order (z1, z2)
    int e1 = 0, e2 = 0;   // pair orders, e1 <= e2
    int q1 = 0, q2 = 0;   // pole labels carrying e1, e2
    std::vector<int> b;       // residueless orders, in label order
    std::vector<int> labels;  // pole label of b[i]
};

// C: mu^R = (a | -e1,-e2,-e3 | -b_i ...), e1 <= e2 <= e3.
struct CView {
    int a = 0;
    int e[3] = {0, 0, 0};
    int q[3] = {0, 0, 0};
    std::vector<int> b;
    std::vector<int> labels;
};

// D: mu^R = (a | -e1,-e2 | -e3,-e4 | -b_i ...), e1<=e2, e3<=e4, and when
// exactly one of the two pair blocks is a pair of simple poles it is (e1,e2)
// (the index invariant is defined relative to that normalization).
struct DView {
    int a = 0;
    int e[4] = {0, 0, 0, 0};
    int q[4] = {0, 0, 0, 0};
    std::vector<int> b;
    std::vector<int> labels;
};

// A: mu^R = (a1,a2,a3 | -b_1 | ... | -b_n), all blocks singletons.
struct AView {
    int a[3] = {0, 0, 0};
    std::vector<int> b;
    std::vector<int> labels;
};

BView b_view(const Signature& sig);
CView c_view(const Signature& sig);
DView d_view(const Signature& sig);
AView a_view(const Signature& sig);

} // namespace strata
