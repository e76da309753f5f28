// Closed-form oracles for the contraction move.
//
// The engine computes the far end of a half-arc (u_move) generically: it
// plumbs the boundary point and recognizes the opposite degeneration ray.
// Independently of that machinery, the classification argument works out the
// far end in closed form for nine families of configurations: given the
// arrangement, the angles and the half-arc label on one side, it names the
// type, arrangement, angles and label of the other side explicitly.  Each
// test below transcribes one of those closed forms and checks it against the
// engine on hundreds of randomized strata, arrangements, angles and labels.
//
// These tests are the external calibration of the engine: any mismatch
// between the layout conventions (angle sides, label anchors, reading
// directions of the chains) and the closed forms shows up here as a
// systematic failure.  The closed forms are stated for one fixed assignment
// of the zeros/poles to the levels; where that assignment is the mirror
// image of the engine's canonical one, the transcription re-reads the chain
// from the other end.  Reversing a top chain moves the label anchor by
//   r = 1 - 2*(e_left + sum D)   (mod 2*kappa),
// the slot of the distinguished incoming prong in the reversed frame; the
// adapters below use this constant.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "strata/boundary.hpp"
#include "strata/signature.hpp"

using namespace strata;

namespace {

std::mt19937 rng(20260823);
int rnd(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

int imod(int a, int m) { return ((a % m) + m) % m; }

std::string showv(const std::vector<int>& v) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "}";
    return os.str();
}
std::string show(const PB& pb) { return key(pb.bp) + " @" + showv(pb.labels); }

// The single comparison every oracle performs: walking the half-arc from the
// transcribed input must land exactly on the transcribed output (after
// canonicalization, since the closed forms do not produce canonical data).
void check_move(const char* what, const Signature& sig, const BoundaryPoint& in,
                const std::vector<int>& inlab, const BoundaryPoint& out,
                const std::vector<int>& outlab) {
    INFO(what << "  " << render(sig) << "\n  in:   " << key(in) << " @" << showv(inlab)
              << "\n  out:  " << key(out) << " @" << showv(outlab));
    PB got, want;
    try {
        got = u_move(sig, in, inlab);
    } catch (const std::exception& e) {
        FAIL_CHECK("u_move threw: " << e.what());
        return;
    }
    try {
        want = canonical_point(sig, out, outlab);
    } catch (const std::exception& e) {
        FAIL_CHECK("transcribed output invalid (" << e.what() << ");\nengine got " << show(got));
        return;
    }
    CHECK_MESSAGE(got == want, "got  " << show(got) << "\nwant " << show(want));
}

// ---------------------------------------------------------------------------
// Randomized signatures with the residue block(s) stored first, so that the
// i-th residueless pole (1-based, as the closed forms number them) carries
// the signature label i + #pair-members.  All Cvec/tau translation between
// the two numberings is then a constant shift.
// ---------------------------------------------------------------------------

struct BS {
    Signature sig;
    int a1 = 0, a2 = 0, e1 = 0, e2 = 0, nb = 0;
    std::vector<int> b; // b[i-1] = order of residueless pole i
};

BS rand_bsig(int e1, int e2, int nb) {
    BS s;
    s.e1 = e1;
    s.e2 = e2;
    s.nb = nb;
    s.b.resize(static_cast<size_t>(nb));
    int sb = 0;
    for (auto& x : s.b) {
        x = rnd(2, 4);
        sb += x;
    }
    int S = e1 + e2 + sb - 2;
    s.a1 = rnd(1, S - 1);
    s.a2 = S - s.a1;
    s.sig.zeros = {s.a1, s.a2};
    s.sig.poles = {e1, e2};
    for (int x : s.b) s.sig.poles.push_back(x);
    s.sig.blocks = {{1, 2}};
    for (int i = 0; i < nb; ++i) s.sig.blocks.push_back({i + 3});
    validate(s.sig);
    auto bv = b_view(s.sig);
    REQUIRE(bv.q1 == 1);
    REQUIRE(bv.q2 == 2);
    return s;
}

// Angles C_i in [1, b_i - 1], one per residueless pole.
std::vector<int> rand_angles(const std::vector<int>& b) {
    std::vector<int> C;
    for (int x : b) C.push_back(rnd(1, x - 1));
    return C;
}

std::vector<int> shift_tau(const std::vector<int>& tauP, int off) {
    std::vector<int> t;
    for (int x : tauP) t.push_back(x + off);
    return t;
}

int sum_b(const BS& s, int from, int to) { // paper positions (Id arrangement)
    int acc = 0;
    for (int i = from; i <= to; ++i) acc += s.b[static_cast<size_t>(i - 1)];
    return acc;
}

// ---- boundary-point builders (B family, identity-free in tau) ------------

BoundaryPoint mkBI(const BS& s, int l, const std::vector<int>& tauP, const std::vector<int>& Cp) {
    BoundaryPoint bp;
    bp.type = BType::B_I;
    bp.l1 = bp.l2 = l;
    bp.tau = shift_tau(tauP, 2);
    bp.Cvec = Cp;
    int kb = 0;
    for (int pos = 0; pos < l; ++pos) kb += s.b[static_cast<size_t>(tauP[static_cast<size_t>(pos)] - 1)];
    bp.kappa = {s.e1 + s.e2 + kb - 1};
    int cs = s.a1 + 1;
    for (int pos = l; pos < s.nb; ++pos) cs -= Cp[static_cast<size_t>(tauP[static_cast<size_t>(pos)] - 1)];
    bp.C = cs;
    return bp;
}

BoundaryPoint mkBIIIa(const BS& s, std::vector<int> h, int l1, int l2,
                      const std::vector<int>& tauP, const std::vector<int>& Cp, int u, int v) {
    BoundaryPoint bp;
    bp.type = BType::B_IIIa;
    bp.h = std::move(h);
    bp.l1 = l1;
    bp.l2 = l2;
    bp.tau = shift_tau(tauP, 2);
    bp.Cvec = Cp;
    int ah1 = bp.h[0] == 1 ? s.a1 : s.a2;
    int ah2 = bp.h[0] == 1 ? s.a2 : s.a1;
    int pre = 0, post = 0;
    for (int pos = 0; pos < l1; ++pos) pre += s.b[static_cast<size_t>(tauP[static_cast<size_t>(pos)] - 1)];
    for (int pos = l2; pos < s.nb; ++pos) post += s.b[static_cast<size_t>(tauP[static_cast<size_t>(pos)] - 1)];
    int k1 = ah1 - s.e1 + 1 - pre;
    int k2 = ah2 - s.e2 + 1 - post;
    bp.kappa = {k1, k2};
    bp.pr = canonical_prong_class(u, v, k1, k2);
    return bp;
}

BoundaryPoint mkBIIIb(const BS& s, int zt, int qt, int l, const std::vector<int>& tauP,
                      const std::vector<int>& Cp) {
    BoundaryPoint bp;
    bp.type = BType::B_IIIb;
    bp.h = {zt, qt};
    bp.l1 = bp.l2 = l;
    bp.tau = shift_tau(tauP, 2);
    bp.Cvec = Cp;
    int a_zt = zt == 1 ? s.a1 : s.a2;
    int e_qt = qt == 1 ? s.e1 : s.e2;
    int topb = 0, topD = 0;
    for (int pos = l; pos < s.nb; ++pos) {
        int i = tauP[static_cast<size_t>(pos)];
        topb += s.b[static_cast<size_t>(i - 1)];
        topD += s.b[static_cast<size_t>(i - 1)] - Cp[static_cast<size_t>(i - 1)];
    }
    bp.kappa = {e_qt + topb - 1 - a_zt};
    bp.C = e_qt - 1 - a_zt + topD;
    return bp;
}

BoundaryPoint mkBIIIc(const BS& s, std::vector<int> h, int l1, int l2,
                      const std::vector<int>& tauP, const std::vector<int>& Cp, int Cs) {
    BoundaryPoint bp;
    bp.type = BType::B_IIIc;
    bp.h = std::move(h);
    bp.l1 = l1;
    bp.l2 = l2;
    bp.tau = shift_tau(tauP, 2);
    bp.Cvec = Cp;
    int kap = 0;
    for (int pos = l1; pos < l2; ++pos) kap += Cp[static_cast<size_t>(tauP[static_cast<size_t>(pos)] - 1)];
    bp.kappa = {kap};
    bp.C = Cs;
    return bp;
}

} // namespace

// ---------------------------------------------------------------------------
// Oracle 1: a half-arc at a two-node B point (each zero on its own bottom
// chain, the residue pair split over the caps) whose label pair (u, v) has u
// inside the first top-cycle sector and v inside the j-th (j > 1) contracts,
// at the far end, to the one-node point with both zeros on the bottom cycle:
// the top cycle is cut open at the two marked prongs and splices into the
// chain arrangement pre . mid(1..j) . post on top (the two sector angles
// replaced by their remainders), while the mid poles beyond the v-sector
// drop to the bottom chain, reversed and with complementary angles.  The
// far label is odd, with
//   u' = d-sector boundary c_j + sum_{k<=l1} C_k - u
// modulo the far star order (independent of v within its sector).
// ---------------------------------------------------------------------------

TEST_CASE("move oracle: splitting two-node point to the bottom-cycle point") {
    int hits = 0, tries = 0;
    while (hits < 500 && tries < 400000) {
        ++tries;
        int nb = rnd(2, 4);
        BS s = [&] {
            int e1 = rnd(1, 3);
            return rand_bsig(e1, rnd(e1, 3), nb);
        }();
        if (nb < 2) continue;
        int l1 = rnd(0, nb - 2);
        int l2 = rnd(l1 + 2, nb);
        // Closed form is stated with z2 on the chain capped by q1.
        int k1 = s.a2 - s.e1 + 1 - sum_b(s, 1, l1);
        int k2 = s.a1 - s.e2 + 1 - sum_b(s, l2 + 1, nb);
        if (k1 < 1 || k2 < 1) continue;
        // Top-cycle angles must close up: sum of mid C equals k1.
        std::vector<int> Cp = rand_angles(s.b);
        {
            bool ok = false;
            for (int t = 0; t < 60 && !ok; ++t) {
                int sc = 0;
                for (int i = l1 + 1; i <= l2; ++i) {
                    Cp[static_cast<size_t>(i - 1)] = rnd(1, s.b[static_cast<size_t>(i - 1)] - 1);
                    sc += Cp[static_cast<size_t>(i - 1)];
                }
                ok = sc == k1;
            }
            if (!ok) continue;
        }
        // Sector boundaries of the two node stars along the mid cycle.
        std::vector<int> c{0}, d{0};
        for (int i = l1 + 1; i <= l2; ++i) {
            c.push_back(c.back() + Cp[static_cast<size_t>(i - 1)]);
            d.push_back(d.back() + s.b[static_cast<size_t>(i - 1)] - Cp[static_cast<size_t>(i - 1)]);
        }
        REQUIRE(c.back() == k1);
        REQUIRE(d.back() == k2);

        std::vector<int> tauId(static_cast<size_t>(nb));
        std::iota(tauId.begin(), tauId.end(), 1);

        for (int u = 0; u < c[1] && hits < 500; ++u)
            for (int v = 1; v <= k2 && hits < 500; ++v) {
                int j = 0;
                for (int t = 1; t < static_cast<int>(d.size()); ++t)
                    if (d[static_cast<size_t>(t - 1)] < v && v <= d[static_cast<size_t>(t)]) j = t;
                if (j <= 1) continue;

                BoundaryPoint in = mkBIIIa(s, {2, 1}, l1, l2, tauId, Cp, u, v);
                REQUIRE_NOTHROW(validate_boundary(s.sig, in));

                int lP = l1 + j + (nb - l2);
                std::vector<int> tauOut;
                for (int i = 1; i <= nb; ++i) {
                    if (i <= l1 + j) tauOut.push_back(i);
                    else if (i <= lP) tauOut.push_back(i + (l2 - l1 - j));
                    else tauOut.push_back(i - (nb - l2));
                }
                std::vector<int> Cout = Cp;
                Cout[static_cast<size_t>(l1)] = c[1] - u;
                Cout[static_cast<size_t>(l1 + j - 1)] =
                    Cp[static_cast<size_t>(l1 + j - 1)] + d[static_cast<size_t>(j)] - v;
                // Mid poles beyond the v-sector drop to the bottom chain,
                // read back in reverse with complementary angles.
                std::reverse(tauOut.begin() + lP, tauOut.end());
                for (int i = l1 + j + 1; i <= l2; ++i)
                    Cout[static_cast<size_t>(i - 1)] =
                        s.b[static_cast<size_t>(i - 1)] - Cout[static_cast<size_t>(i - 1)];
                BoundaryPoint out = mkBI(s, lP, tauOut, Cout);
                int Cpre = 0;
                for (int k = 1; k <= l1; ++k) Cpre += Cp[static_cast<size_t>(k - 1)];
                int up = imod(c[static_cast<size_t>(j)] + Cpre - u, out.kappa[0]);
                check_move("IIIa-split -> bottom cycle", s.sig, in,
                           {imod(2 * u, 2 * k1), imod(2 * v, 2 * k2)}, out,
                           {imod(2 * up + 1, 2 * out.kappa[0])});
                ++hits;
            }
    }
    REQUIRE(hits == 500);
}

// ---------------------------------------------------------------------------
// Oracle 2: the one-node B point with one zero and one pair pole on the top
// cycle.  The top star is tiled by the scalar sector [0, C) and the pole
// sectors [c_{j-1}, c_j) with c_0 = C.  Contraction lands on the bottom-cycle
// point.  In the scalar sector the whole top cycle drops to the bottom chain,
// read back in reverse with complementary angles; in the pole sector of the
// j-th top pole, that pole and everything after it joins the top chain (the
// sector pole first, carrying the remainder angle c_j - u), while the top
// poles before it drop to the bottom chain, again reversed with
// complementary angles.  The far label is odd, with
//   u' = C + sum_{k<=l} C_k - u            (scalar sector)
//   u' = kappa + C + sum_{k<=l} C_k - u    (pole sectors)
// modulo the far star order.
// ---------------------------------------------------------------------------

TEST_CASE("move oracle: mixed-cycle point to the bottom-cycle point") {
    int hits = 0, tries = 0;
    while (hits < 500 && tries < 400000) {
        ++tries;
        int nb = rnd(2, 4);
        BS s = [&] {
            int e1 = rnd(1, 3);
            return rand_bsig(e1, rnd(std::max(e1, 2), 3), nb);
        }();
        int l = rnd(0, nb - 1);
        std::vector<int> Cp = rand_angles(s.b);
        // Closed form stated with z2 and q1 on the bottom chain, so z1 and q2
        // ride the top cycle.
        int a_zt = s.a1, e_qt = s.e2;
        int Cs = e_qt - 1 - a_zt;
        for (int i = l + 1; i <= nb; ++i)
            Cs += s.b[static_cast<size_t>(i - 1)] - Cp[static_cast<size_t>(i - 1)];
        if (Cs < 1 || Cs > e_qt - 1) continue;
        int kap = e_qt + sum_b(s, l + 1, nb) - 1 - a_zt;
        if (kap < 2) continue;

        std::vector<int> tauId(static_cast<size_t>(nb));
        std::iota(tauId.begin(), tauId.end(), 1);
        BoundaryPoint in = mkBIIIb(s, 1, 2, l, tauId, Cp);
        REQUIRE(in.C == Cs);
        REQUIRE_NOTHROW(validate_boundary(s.sig, in));

        std::vector<int> c{Cs};
        for (int i = l + 1; i <= nb; ++i) c.push_back(c.back() + Cp[static_cast<size_t>(i - 1)]);
        REQUIRE(c.back() == kap);

        int Cbot = 0;
        for (int k = 1; k <= l; ++k) Cbot += Cp[static_cast<size_t>(k - 1)];

        for (int u = 0; u < kap && hits < 500; ++u) {
            std::vector<int> tauOut, Cout = Cp;
            int lP, up;
            auto flip = [&](int i) {
                Cout[static_cast<size_t>(i - 1)] =
                    s.b[static_cast<size_t>(i - 1)] - Cout[static_cast<size_t>(i - 1)];
            };
            if (u < Cs) {
                lP = l;
                for (int i = 1; i <= l; ++i) tauOut.push_back(i);
                for (int i = nb; i > l; --i) {
                    tauOut.push_back(i);
                    flip(i);
                }
            } else {
                int j = 0;
                for (int t = 1; t < static_cast<int>(c.size()); ++t)
                    if (c[static_cast<size_t>(t - 1)] <= u && u < c[static_cast<size_t>(t)]) j = t;
                REQUIRE(j >= 1);
                lP = nb + 1 - j;
                for (int i = 1; i <= l; ++i) tauOut.push_back(i);
                for (int i = l + j; i <= nb; ++i) tauOut.push_back(i);
                for (int i = l + j - 1; i > l; --i) {
                    tauOut.push_back(i);
                    flip(i);
                }
                Cout[static_cast<size_t>(l + j - 1)] = c[static_cast<size_t>(j)] - u;
            }
            BoundaryPoint out = mkBI(s, lP, tauOut, Cout);
            up = imod((u < Cs ? 0 : kap) + Cs + Cbot - u, out.kappa[0]);
            check_move("mixed cycle -> bottom cycle", s.sig, in, {imod(2 * u, 2 * kap)}, out,
                       {imod(2 * up + 1, 2 * out.kappa[0])});
            ++hits;
        }
    }
    REQUIRE(hits == 500);
}

// ---------------------------------------------------------------------------
// Oracle 3: the one-node B point whose top cycle carries one zero and both
// pair poles stacked as a vertical chain (the node pole at angle C).  The
// chain feet sit at prongs u and u + C; the hypothesis puts u in the first
// mid sector and u + C in the j-th (j > 1).  Contraction splices the chain
// arrangement pre . mid(1..j) . post on top with the two remainder angles
// c_1 - u and u + C - c_{j-1}; the mid poles beyond the j-th drop to the
// bottom chain reversed with complementary angles.  The far label is odd,
//   u' = c_j + sum_pre C_k + sum_post b_k + max(e1, e2) - u
// modulo the far star order.
// ---------------------------------------------------------------------------

TEST_CASE("move oracle: stacked-chain point to the bottom-cycle point") {
    int hits = 0, tries = 0;
    while (hits < 500 && tries < 400000) {
        ++tries;
        int nb = rnd(2, 4);
        BS s = [&] {
            int e1 = rnd(1, 3);
            return rand_bsig(e1, rnd(e1, 3), nb);
        }();
        int l1 = rnd(0, nb - 2);
        int l2 = rnd(l1 + 2, nb);
        std::vector<int> Cp = rand_angles(s.b);
        int kap = 0, Dmid = 0;
        for (int i = l1 + 1; i <= l2; ++i) {
            kap += Cp[static_cast<size_t>(i - 1)];
            Dmid += s.b[static_cast<size_t>(i - 1)] - Cp[static_cast<size_t>(i - 1)];
        }
        // Closed form stated with z1 on the top cycle: its cone angle pins
        // the mid D sum.
        if (Dmid != s.a1 + 1 || kap < 2) continue;
        int Cs = rnd(1, kap);

        std::vector<int> tauId(static_cast<size_t>(nb));
        std::iota(tauId.begin(), tauId.end(), 1);
        BoundaryPoint in = mkBIIIc(s, {2, 1}, l1, l2, tauId, Cp, Cs);
        REQUIRE_NOTHROW(validate_boundary(s.sig, in));

        std::vector<int> c{0};
        for (int i = l1 + 1; i <= l2; ++i) c.push_back(c.back() + Cp[static_cast<size_t>(i - 1)]);
        int Cpre = 0, bpost = 0;
        for (int k = 1; k <= l1; ++k) Cpre += Cp[static_cast<size_t>(k - 1)];
        for (int k = l2 + 1; k <= nb; ++k) bpost += s.b[static_cast<size_t>(k - 1)];

        for (int u = 0; u < c[1] && hits < 500; ++u) {
            int w = imod(u + Cs - 1, kap) + 1;
            int j = 0;
            for (int t = 1; t < static_cast<int>(c.size()); ++t)
                if (c[static_cast<size_t>(t - 1)] < w && w <= c[static_cast<size_t>(t)]) j = t;
            if (j <= 1) continue;

            int lP = l1 + j + (nb - l2);
            std::vector<int> tauOut;
            for (int i = 1; i <= l1 + j; ++i) tauOut.push_back(i);
            for (int i = l2 + 1; i <= nb; ++i) tauOut.push_back(i);
            for (int i = l2; i > l1 + j; --i) tauOut.push_back(i);
            std::vector<int> Cout = Cp;
            Cout[static_cast<size_t>(l1)] = c[1] - u;
            Cout[static_cast<size_t>(l1 + j - 1)] = w - c[static_cast<size_t>(j - 1)];
            for (int i = l1 + j + 1; i <= l2; ++i)
                Cout[static_cast<size_t>(i - 1)] =
                    s.b[static_cast<size_t>(i - 1)] - Cout[static_cast<size_t>(i - 1)];
            BoundaryPoint out = mkBI(s, lP, tauOut, Cout);
            int up = imod(c[static_cast<size_t>(j)] + Cpre + bpost + std::max(s.e1, s.e2) - u,
                          out.kappa[0]);
            check_move("stacked chain -> bottom cycle", s.sig, in, {imod(2 * u, 2 * kap)}, out,
                       {imod(2 * up + 1, 2 * out.kappa[0])});
            ++hits;
        }
    }
    REQUIRE(hits == 500);
}

/*
 * Oracle 4: arcs joining two bottom-cycle points.  At a bottom-cycle
 * boundary the chain node carries a star of size 2*kappa, and the arc at a
 * half-integer position u + 1/2 connects to another bottom-cycle point
 * whenever both induced cuts land on the chain's C side (or inside the cone
 * of a chain endpoint).  Writing c_i (resp. d_i) for the cumulative C
 * (resp. e_1-shifted D) sums along the chain, the hypothesis reads: the cut
 * u lies in the i-th C sector (i = 0 for the q_1 cone) and the companion
 * cut u + C lies in the j-th sector with j > i, where j = l + 1 denotes the
 * q_2 cone.  The far end keeps poles 1..i, receives the old bottom poles
 * reversed with complementary angles, then poles j..l, while poles
 * i+1..j-1 drop to the far bottom in order with their angles kept.  Both
 * cut sectors are truncated at the cut: C'_i = u - c_{i-1} and
 * C'_j = c_j - (u + C) + 1.  The far label is even, with
 * u' = u.[i>=1] + sum D_bot + ((-d_{j-1} - (u + C)) mod kappa) + 2.
 */
TEST_CASE("move oracle: bottom-cycle point to the bottom-cycle point") {
    int hits = 0, tries = 0;
    while (hits < 500 && tries < 400000) {
        ++tries;
        int nb = rnd(2, 5);
        BS s = [&] {
            int e1 = rnd(1, 3);
            return rand_bsig(e1, rnd(e1, 3), nb);
        }();
        int l = rnd(0, nb);
        std::vector<int> Cp = rand_angles(s.b);
        int Cbot = 0, Dbot = 0;
        for (int i = l + 1; i <= nb; ++i) {
            Cbot += Cp[static_cast<size_t>(i - 1)];
            Dbot += s.b[static_cast<size_t>(i - 1)] - Cp[static_cast<size_t>(i - 1)];
        }
        int kap = s.e1 + s.e2 + sum_b(s, 1, l) - 1;
        int Cs = s.a1 + 1 - Cbot;
        if (Cs < 1 || kap + 1 - Cs < 1 || kap < 2) continue;

        std::vector<int> tauId(static_cast<size_t>(nb));
        std::iota(tauId.begin(), tauId.end(), 1);
        BoundaryPoint in = mkBI(s, l, tauId, Cp);
        REQUIRE(in.C == Cs);
        REQUIRE_NOTHROW(validate_boundary(s.sig, in));

        std::vector<int> c{0}, d{s.e1};
        for (int i = 1; i <= l; ++i) {
            c.push_back(c.back() + Cp[static_cast<size_t>(i - 1)]);
            d.push_back(d.back() + s.b[static_cast<size_t>(i - 1)] - Cp[static_cast<size_t>(i - 1)]);
        }
        for (int u = 0; u < kap && hits < 500; ++u) {
            int ut = imod(u - 1, kap) + 1;
            int xt = imod(u + Cs - 1, kap) + 1;
            int i0 = -1, j0 = -1;
            if (ut > kap - s.e1) i0 = 0;
            else
                for (int i = 1; i <= l; ++i)
                    if (c[static_cast<size_t>(i - 1)] < ut && ut <= c[static_cast<size_t>(i)]) i0 = i;
            if (xt <= c[static_cast<size_t>(l)]) {
                for (int j = 1; j <= l; ++j)
                    if (c[static_cast<size_t>(j - 1)] < xt && xt <= c[static_cast<size_t>(j)]) j0 = j;
            } else if (xt <= c[static_cast<size_t>(l)] + s.e2 - 1) {
                j0 = l + 1;
            }
            if (i0 < 0 || j0 < 0 || j0 <= i0) continue;

            int lP = nb - (j0 - i0 - 1);
            std::vector<int> tauOut;
            for (int k = 1; k <= i0; ++k) tauOut.push_back(k);
            for (int k = nb; k >= l + 1; --k) tauOut.push_back(k);
            for (int k = j0; k <= l; ++k) tauOut.push_back(k);
            for (int k = i0 + 1; k <= j0 - 1; ++k) tauOut.push_back(k);
            std::vector<int> Cout = Cp;
            for (int k = l + 1; k <= nb; ++k)
                Cout[static_cast<size_t>(k - 1)] =
                    s.b[static_cast<size_t>(k - 1)] - Cp[static_cast<size_t>(k - 1)];
            if (i0 >= 1) Cout[static_cast<size_t>(i0 - 1)] = u - c[static_cast<size_t>(i0 - 1)];
            if (j0 <= l) Cout[static_cast<size_t>(j0 - 1)] = c[static_cast<size_t>(j0)] - xt + 1;
            BoundaryPoint out = mkBI(s, lP, tauOut, Cout);
            int up = imod((i0 >= 1 ? u : 0) + Dbot +
                              imod(-d[static_cast<size_t>(std::min(j0 - 1, l))] - (u + Cs), kap) + 2,
                          out.kappa[0]);
            check_move("bottom cycle -> bottom cycle", s.sig, in, {imod(2 * u + 1, 2 * kap)}, out,
                       {imod(2 * up, 2 * out.kappa[0])});
            ++hits;
        }
    }
    REQUIRE(hits == 500);
}

/*
 * Oracle 5: the triple-pole family move.  The boundary carries a single
 * chain node with h = (1,2,3) and the arc at an integer position u with
 * 0 <= u < c_l + e_2 reconnects to the point with h = (2,3,1): the chain
 * poles l..j are read back reversed with complementary angles (pole j
 * carries D_j + (u - c_{j-1})), the untouched bottom poles follow in order,
 * and poles j-1..1 drop to the far bottom reversed with complementary
 * angles.  The window index j satisfies c_{j-1} <= u < c_j; the band
 * c_l <= u < c_l + e_2 acts as j = l + 1.  The far label is even:
 * u' = sum_{k=j..l} D_k for j <= l, and u' = c_l - u on the last band.
 */
TEST_CASE("move oracle: triple-pole chain point across the pole swap") {
    int hits = 0, tries = 0;
    while (hits < 500 && tries < 400000) {
        ++tries;
        int n3 = rnd(2, 4);
        std::vector<int> b(static_cast<size_t>(n3));
        int sb = 0;
        for (auto& x : b) {
            x = rnd(2, 5);
            sb += x;
        }
        int e1 = rnd(1, 4), e2 = rnd(e1, 4), e3 = rnd(e2, 4);
        int a = e1 + e2 + e3 + sb - 2;
        Signature sig;
        sig.zeros = {a};
        sig.poles = {e1, e2, e3};
        for (int x : b) sig.poles.push_back(x);
        sig.blocks = {{1, 2, 3}};
        for (int i = 0; i < n3; ++i) sig.blocks.push_back({i + 4});
        int l = rnd(0, n3);
        std::vector<int> Cp(static_cast<size_t>(n3));
        for (int i = 0; i < n3; ++i) Cp[static_cast<size_t>(i)] = rnd(1, b[static_cast<size_t>(i)] - 1);
        int sbot = 0;
        for (int i = l; i < n3; ++i) sbot += b[static_cast<size_t>(i)];
        int kap = a - e3 + 1 - sbot;
        if (kap < 2) continue;
        BoundaryPoint in;
        in.type = BType::C_III;
        in.h = {1, 2, 3};
        in.l1 = in.l2 = l;
        for (int i = 1; i <= n3; ++i) in.tau.push_back(i + 3);
        in.Cvec = Cp;
        in.kappa = {kap};
        REQUIRE_NOTHROW(validate_boundary(sig, in));

        std::vector<int> c{0}, dD{0};
        for (int i = 1; i <= l; ++i) {
            c.push_back(c.back() + Cp[static_cast<size_t>(i - 1)]);
            dD.push_back(dD.back() + b[static_cast<size_t>(i - 1)] - Cp[static_cast<size_t>(i - 1)]);
        }
        for (int u = 0; u < c[static_cast<size_t>(l)] + e2 && u < kap && hits < 500; ++u) {
            int j = l + 1;
            if (u < c[static_cast<size_t>(l)])
                for (int t = 1; t <= l; ++t)
                    if (c[static_cast<size_t>(t - 1)] <= u && u < c[static_cast<size_t>(t)]) j = t;
            BoundaryPoint out;
            out.type = BType::C_III;
            out.h = {2, 3, 1};
            out.l1 = out.l2 = n3 - j + 1;
            for (int i = l; i >= j; --i) out.tau.push_back(i + 3);
            for (int i = l + 1; i <= n3; ++i) out.tau.push_back(i + 3);
            for (int i = j - 1; i >= 1; --i) out.tau.push_back(i + 3);
            std::vector<int> Cv = Cp;
            for (int i = 1; i <= l; ++i)
                Cv[static_cast<size_t>(i - 1)] =
                    b[static_cast<size_t>(i - 1)] - Cp[static_cast<size_t>(i - 1)];
            if (j <= l)
                Cv[static_cast<size_t>(j - 1)] += u - c[static_cast<size_t>(j - 1)];
            out.Cvec = Cv;
            int sb2 = 0;
            for (int t = out.l1; t < n3; ++t) sb2 += b[static_cast<size_t>(out.tau[static_cast<size_t>(t)] - 4)];
            out.kappa = {a - e1 + 1 - sb2};
            int kap2 = out.kappa[0];
            int up = j <= l ? imod(dD[static_cast<size_t>(l)] - dD[static_cast<size_t>(j - 1)], kap2)
                            : imod(c[static_cast<size_t>(l)] - u, kap2);
            check_move("triple-pole swap", sig, in, {imod(2 * u + 1, 2 * kap)}, out,
                       {imod(2 * up, 2 * kap2)});
            ++hits;
        }
    }
    REQUIRE(hits == 500);
}

/*
 * Oracle 6: the splitting two-node point of the two-pair family.  Both
 * residue pairs are split over a pair of top cycles (h = (4,3), l1 = 0,
 * l2 = n-4, identity arrangement, all chain poles on the middle segment)
 * and the half-arc carries the label pair (u, v).  For 0 < u < e_4 the far
 * end is the stacked point with h = (4,3,1,2) and scalar angle u: the
 * v-star splits into a band of width e_2 (t = 0, nothing moves) followed by
 * windows of widths C_n-4, C_n-4+1, ..., C_1 read in reverse pole order;
 * landing in the t-th window lifts the last t chain poles to the top as the
 * rotation (j+1, ..., n-4, 1, ..., j) with j = n-4-t, pole j+1 trading its
 * angle for the window remainder v - chat_{t-1}.  The far label is even,
 *   u' = u + v + sum_{k>j} D_k   (mod kappa'),
 * the tail sum of the complementary angles below the surviving cut.
 */
TEST_CASE("move oracle: splitting two-pair point to the stacked point") {
    int hits = 0, tries = 0;
    while (hits < 500 && tries < 400000) {
        ++tries;
        int n4 = rnd(2, 4);
        std::vector<int> b(static_cast<size_t>(n4));
        int sb = 0;
        for (auto& x : b) {
            x = rnd(2, 5);
            sb += x;
        }
        int e1 = rnd(1, 3), e2 = rnd(e1, 3), e3 = rnd(1, 3), e4 = rnd(std::max(e3, 2), 4);
        if (e3 == 1 && e4 == 1 && !(e1 == 1 && e2 == 1)) continue;
        int a = e1 + e2 + e3 + e4 + sb - 2;
        Signature sig;
        sig.zeros = {a};
        sig.poles = {e1, e2, e3, e4};
        for (int x : b) sig.poles.push_back(x);
        sig.blocks = {{1, 2}, {3, 4}};
        for (int i = 0; i < n4; ++i) sig.blocks.push_back({i + 5});
        std::vector<int> Cp(static_cast<size_t>(n4));
        for (int i = 0; i < n4; ++i) Cp[static_cast<size_t>(i)] = rnd(1, b[static_cast<size_t>(i)] - 1);
        int k1 = e1 + e4 - 1, k2 = e2 + e3 - 1 + sb;
        BoundaryPoint in;
        in.type = BType::D_IIIa;
        in.h = {4, 3};
        in.l1 = 0;
        in.l2 = n4;
        for (int i = 1; i <= n4; ++i) in.tau.push_back(i + 4);
        in.Cvec = Cp;
        in.kappa = {k1, k2};
        // chat: window boundaries of the v-star; d2: cumulative D (forward).
        std::vector<int> chat{e2 - 1}, d2{0};
        for (int i = 1; i <= n4; ++i) {
            chat.push_back(chat.back() + Cp[static_cast<size_t>(n4 - i)]);
            d2.push_back(d2.back() + b[static_cast<size_t>(i - 1)] - Cp[static_cast<size_t>(i - 1)]);
        }
        for (int u = 1; u < e4 && hits < 500; ++u)
            for (int v = 0; v <= chat[static_cast<size_t>(n4)] && hits < 500; ++v) {
                in.pr = canonical_prong_class(u, v, k1, k2);
                REQUIRE_NOTHROW(validate_boundary(sig, in));
                int t = 0;
                for (int s = 1; s <= n4; ++s)
                    if (chat[static_cast<size_t>(s - 1)] < v && v <= chat[static_cast<size_t>(s)]) t = s;
                int j = n4 - t;
                BoundaryPoint out;
                out.type = BType::D_IIIb;
                out.h = {4, 3, 1, 2};
                out.l1 = 0;
                out.l2 = t;
                for (int i = j + 1; i <= n4; ++i) out.tau.push_back(i + 4);
                for (int i = 1; i <= j; ++i) out.tau.push_back(i + 4);
                std::vector<int> Cv = Cp;
                if (t >= 1) Cv[static_cast<size_t>(j)] = v - chat[static_cast<size_t>(t - 1)];
                out.Cvec = Cv;
                out.C = u;
                int smid = 0;
                for (int i = j + 1; i <= n4; ++i) smid += b[static_cast<size_t>(i - 1)];
                out.kappa = {e4 + e1 + e2 - 1 + smid};
                int kap2 = out.kappa[0];
                int up = imod(u + v + d2[static_cast<size_t>(n4)] - d2[static_cast<size_t>(j)], kap2);
                check_move("two-pair split", sig, in,
                           {imod(2 * u, 2 * k1), imod(2 * v, 2 * k2)}, out,
                           {imod(2 * up, 2 * kap2)});
                ++hits;
            }
    }
    REQUIRE(hits == 500);
}

/*
 * Oracle 7: the stacked point of the two-pair family, both self-moves.
 * The input has h = (4,3,1,2): the split pair-pole of order e_4 carries the
 * scalar angle Cs, and the e_1-cap sits on the bottom cycle.  Two windows
 * of the star send the arc back to a stacked point.
 *
 * Case 1 (label 2u with -e_1 < u < 0): the e_1-cap splits instead, giving
 * h = (1,2,3,4) with scalar -u; the far bottom reads (post asc)(pre asc)
 * and the mid poles lift to the top reversed with complementary angles.
 * The far label is odd with u' = -u + Cs - 1 + sum C_pre + sum C_post.
 *
 * Case 2 (odd label 2(cT + e_2 - 1 - s) + 1, cT = Cs + sum C_pre + sum
 * C_mid, 1 <= s <= e_2 - 1): the e_2-cap splits, giving h = (2,1,3,4) with
 * scalar s; the far bottom reads (post asc)(mid desc, complementary)
 * (pre asc).  The far label is odd with
 *   u' = s + sum D_mid + sum C_post + (e_4 - Cs) - 1.
 */
TEST_CASE("move oracle: stacked two-pair point to itself") {
    int hits = 0, tries = 0;
    while (hits < 500 && tries < 400000) {
        ++tries;
        int n4 = rnd(2, 4);
        std::vector<int> b(static_cast<size_t>(n4));
        int sb = 0;
        for (auto& x : b) {
            x = rnd(2, 5);
            sb += x;
        }
        int e1 = rnd(1, 3), e2 = rnd(e1, 3), e3 = rnd(1, 3), e4 = rnd(std::max(e3, 2), 4);
        if (e3 == 1 && e4 == 1 && !(e1 == 1 && e2 == 1)) continue;
        int a = e1 + e2 + e3 + e4 + sb - 2;
        Signature sig;
        sig.zeros = {a};
        sig.poles = {e1, e2, e3, e4};
        for (int x : b) sig.poles.push_back(x);
        sig.blocks = {{1, 2}, {3, 4}};
        for (int i = 0; i < n4; ++i) sig.blocks.push_back({i + 5});
        std::vector<int> Cp(static_cast<size_t>(n4));
        for (int i = 0; i < n4; ++i) Cp[static_cast<size_t>(i)] = rnd(1, b[static_cast<size_t>(i)] - 1);
        int l1 = rnd(0, n4), l2 = rnd(l1, n4);
        if (e4 < 2) continue;
        int Cs = rnd(1, e4 - 1);
        int spre = 0, smid = 0, spost = 0, Cpre = 0, Cpost = 0, Cmid = 0, Dmid = 0;
        for (int i = 1; i <= l1; ++i) {
            spre += b[static_cast<size_t>(i - 1)];
            Cpre += Cp[static_cast<size_t>(i - 1)];
        }
        for (int i = l1 + 1; i <= l2; ++i) {
            smid += b[static_cast<size_t>(i - 1)];
            Cmid += Cp[static_cast<size_t>(i - 1)];
            Dmid += b[static_cast<size_t>(i - 1)] - Cp[static_cast<size_t>(i - 1)];
        }
        for (int i = l2 + 1; i <= n4; ++i) {
            spost += b[static_cast<size_t>(i - 1)];
            Cpost += Cp[static_cast<size_t>(i - 1)];
        }
        int kap = e4 + e1 + e2 - 1 + spre + smid;
        BoundaryPoint in;
        in.type = BType::D_IIIb;
        in.h = {4, 3, 1, 2};
        in.l1 = l1;
        in.l2 = l2;
        for (int i = 1; i <= n4; ++i) in.tau.push_back(i + 4);
        in.Cvec = Cp;
        in.C = Cs;
        in.kappa = {kap};
        REQUIRE_NOTHROW(validate_boundary(sig, in));
        std::vector<int> Cv = Cp;
        for (int i = l1 + 1; i <= l2; ++i)
            Cv[static_cast<size_t>(i - 1)] =
                b[static_cast<size_t>(i - 1)] - Cp[static_cast<size_t>(i - 1)];
        for (int u = -e1 + 1; u <= -1 && hits < 500; ++u) {
            BoundaryPoint out;
            out.type = BType::D_IIIb;
            out.h = {1, 2, 3, 4};
            out.l1 = n4 - l2;
            out.l2 = n4 - (l2 - l1);
            for (int i = l2 + 1; i <= n4; ++i) out.tau.push_back(i + 4);
            for (int i = 1; i <= l1; ++i) out.tau.push_back(i + 4);
            for (int i = l2; i >= l1 + 1; --i) out.tau.push_back(i + 4);
            out.Cvec = Cv;
            out.C = -u;
            out.kappa = {e1 + e3 + e4 - 1 + spost + spre};
            int kap2 = out.kappa[0];
            int up = imod(-u + Cs - 1 + Cpre + Cpost, kap2);
            check_move("stacked self-move (cap 1)", sig, in, {imod(2 * u, 2 * kap)}, out,
                       {imod(2 * up + 1, 2 * kap2)});
            ++hits;
        }
        int cT = Cs + Cpre + Cmid;
        for (int s = 1; s <= e2 - 1 && hits < 500; ++s) {
            BoundaryPoint out;
            out.type = BType::D_IIIb;
            out.h = {2, 1, 3, 4};
            out.l1 = n4 - l2;
            out.l2 = n4 - l1;
            for (int i = l2 + 1; i <= n4; ++i) out.tau.push_back(i + 4);
            for (int i = l2; i >= l1 + 1; --i) out.tau.push_back(i + 4);
            for (int i = 1; i <= l1; ++i) out.tau.push_back(i + 4);
            out.Cvec = Cv;
            out.C = s;
            out.kappa = {e2 + e3 + e4 - 1 + spost + smid};
            int kap2 = out.kappa[0];
            int up = imod(s + Dmid + Cpost + e4 - Cs - 1, kap2);
            check_move("stacked self-move (cap 2)", sig, in,
                       {imod(2 * (cT + e2 - 1 - s) + 1, 2 * kap)}, out,
                       {imod(2 * up + 1, 2 * kap2)});
            ++hits;
        }
    }
    REQUIRE(hits == 500);
}
