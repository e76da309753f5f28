// boundary.cpp : boundary-point data, materialization into two-level
// separatrix diagrams, plumbing, and enumeration.
//
// The layout conventions are fixed once here and mirrored in recognize.cpp:
//
//   * Bottom chain surfaces are laid out by layout_z2 with the angles Cvec
//     measured on the side of the chain's left end, reading the arrangement
//     left-to-right as listed in the per-type documentation of
//     BoundaryPoint.  Bottom cycle surfaces are laid out by layout_z1 with
//     the node pole last and angles measured at the first-listed zero.
//   * Top blocks are laid out with the node zero as the angle-carrying
//     vertex where possible; top cycle surfaces through a marked zero keep
//     the paper's angle side (the node-zero side for B types, the marked
//     zero side for A).
//   * Each node records the face-circuit anchor of its node pole face and
//     the threading frame (A_idx, s0, dir_top).  The node end at slot s of
//     the node zero is spliced to circuit index
//         A_idx - (s - s0 - dir_top * L)   (mod 2*kappa)
//     where L is the doubled half-arc label.  Odd L realize the common
//     half-turn of the whole top level; marked top zeros rotate by one slot
//     in that case.
#include "strata/boundary.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "strata/blocks.hpp"

namespace strata {

namespace {

// Slot shift of marked top-level zeros under a half-turn of the top level.
constexpr int kMarkedShift = 1;

int imod(int a, int m) { return ((a % m) + m) % m; }

struct Ctx {
    const Signature* sig = nullptr;
    Family fam{};
    BView bv;
    CView cv;
    DView dv;
    AView av;
    std::vector<int> rlabels; // residueless pole labels, ascending
    std::vector<int> rorders; // their orders
};

Ctx make_ctx(const Signature& sig) {
    Ctx c;
    c.sig = &sig;
    c.fam = classify_one_dim(sig);
    switch (c.fam) {
    case Family::A:
        c.av = a_view(sig);
        c.rlabels = c.av.labels;
        c.rorders = c.av.b;
        break;
    case Family::B:
        c.bv = b_view(sig);
        c.rlabels = c.bv.labels;
        c.rorders = c.bv.b;
        break;
    case Family::C:
        c.cv = c_view(sig);
        c.rlabels = c.cv.labels;
        c.rorders = c.cv.b;
        break;
    case Family::D:
        c.dv = d_view(sig);
        c.rlabels = c.dv.labels;
        c.rorders = c.dv.b;
        break;
    default:
        throw UnsupportedFamilyError("boundary enumeration requires a one-dimensional A/B/C/D stratum");
    }
    return c;
}

int ridx(const Ctx& c, int label) {
    auto it = std::lower_bound(c.rlabels.begin(), c.rlabels.end(), label);
    if (it == c.rlabels.end() || *it != label) throw ValidationError("unknown residueless pole label");
    return static_cast<int>(it - c.rlabels.begin());
}

int border(const Ctx& c, int label) { return c.rorders[static_cast<size_t>(ridx(c, label))]; }
int Cof(const Ctx& c, const BoundaryPoint& bp, int label) {
    return bp.Cvec.at(static_cast<size_t>(ridx(c, label)));
}
int Dof(const Ctx& c, const BoundaryPoint& bp, int label) { return border(c, label) - Cof(c, bp, label); }

std::vector<int> seg(const std::vector<int>& v, int from, int to) {
    return {v.begin() + from, v.begin() + to};
}
int sum_orders(const Ctx& c, const std::vector<int>& labels) {
    int s = 0;
    for (int l : labels) s += border(c, l);
    return s;
}
int sum_C(const Ctx& c, const BoundaryPoint& bp, const std::vector<int>& labels) {
    int s = 0;
    for (int l : labels) s += Cof(c, bp, l);
    return s;
}
std::vector<int> map_C(const Ctx& c, const BoundaryPoint& bp, const std::vector<int>& labels) {
    std::vector<int> out;
    for (int l : labels) out.push_back(Cof(c, bp, l));
    return out;
}
std::vector<int> map_D(const Ctx& c, const BoundaryPoint& bp, const std::vector<int>& labels) {
    std::vector<int> out;
    for (int l : labels) out.push_back(Dof(c, bp, l));
    return out;
}

void req(bool cond, const char* msg) {
    if (!cond) throw ValidationError(msg);
}

bool is_min_first(const std::vector<int>& v) {
    return v.empty() || *std::min_element(v.begin(), v.end()) == v.front();
}

// ---- per-family derived quantities used by validation and materialize ----

struct BI {
    std::vector<int> top, bot;
    int node_order = 0, kap = 0, Cs = 0, Ds = 0;
};
BI bi_data(const Ctx& c, const BoundaryPoint& bp) {
    BI d;
    d.top = seg(bp.tau, 0, bp.l1);
    d.bot = seg(bp.tau, bp.l1, static_cast<int>(bp.tau.size()));
    d.node_order = c.bv.e1 + c.bv.e2 + sum_orders(c, d.top);
    d.kap = d.node_order - 1;
    d.Cs = bp.C;
    d.Ds = d.node_order - d.Cs;
    return d;
}

struct BIIIa {
    std::vector<int> pre, mid, post;
    int k1 = 0, k2 = 0;
};
BIIIa biiia_data(const Ctx& c, const BoundaryPoint& bp) {
    BIIIa d;
    d.pre = seg(bp.tau, 0, bp.l1);
    d.mid = seg(bp.tau, bp.l1, bp.l2);
    d.post = seg(bp.tau, bp.l2, static_cast<int>(bp.tau.size()));
    int a1 = bp.h[0] == 1 ? c.bv.a1 : c.bv.a2;
    int a2 = bp.h[0] == 1 ? c.bv.a2 : c.bv.a1;
    d.k1 = a1 - c.bv.e1 + 1 - sum_orders(c, d.pre);
    d.k2 = a2 - c.bv.e2 + 1 - sum_orders(c, d.post);
    return d;
}

struct BIIIb {
    std::vector<int> bot, top;
    int a_zt = 0, a_zb = 0, e_qt = 0, e_qb = 0, qt_label = 0, qb_label = 0;
    int kap = 0, Cs = 0;
};
BIIIb biiib_data(const Ctx& c, const BoundaryPoint& bp) {
    BIIIb d;
    d.bot = seg(bp.tau, 0, bp.l1);
    d.top = seg(bp.tau, bp.l1, static_cast<int>(bp.tau.size()));
    int zt = bp.h[0], qt = bp.h[1];
    d.a_zt = zt == 1 ? c.bv.a1 : c.bv.a2;
    d.a_zb = zt == 1 ? c.bv.a2 : c.bv.a1;
    d.e_qt = qt == 1 ? c.bv.e1 : c.bv.e2;
    d.e_qb = qt == 1 ? c.bv.e2 : c.bv.e1;
    d.qt_label = qt == 1 ? c.bv.q1 : c.bv.q2;
    d.qb_label = qt == 1 ? c.bv.q2 : c.bv.q1;
    d.kap = d.e_qt + sum_orders(c, d.top) - 1 - d.a_zt;
    d.Cs = bp.C;
    return d;
}

struct BIIIc {
    std::vector<int> pre, mid, post;
    int kap = 0, Cs = 0, a_bot = 0, a_top = 0;
};
BIIIc biiic_data(const Ctx& c, const BoundaryPoint& bp) {
    BIIIc d;
    d.pre = seg(bp.tau, 0, bp.l1);
    d.mid = seg(bp.tau, bp.l1, bp.l2);
    d.post = seg(bp.tau, bp.l2, static_cast<int>(bp.tau.size()));
    d.a_bot = bp.h[0] == 1 ? c.bv.a1 : c.bv.a2;
    d.a_top = bp.h[1] == 1 ? c.bv.a1 : c.bv.a2;
    d.kap = sum_C(c, bp, d.mid);
    d.Cs = bp.C;
    return d;
}

struct CIII {
    std::vector<int> top, bot;
    int kap = 0;
};
CIII ciii_data(const Ctx& c, const BoundaryPoint& bp) {
    CIII d;
    d.top = seg(bp.tau, 0, bp.l1);
    d.bot = seg(bp.tau, bp.l1, static_cast<int>(bp.tau.size()));
    d.kap = c.cv.a - c.cv.e[bp.h[2] - 1] + 1 - sum_orders(c, d.bot);
    return d;
}

struct DIIIa {
    std::vector<int> pre, mid, post;
    int k1 = 0, k2 = 0;
};
DIIIa diiia_data(const Ctx& c, const BoundaryPoint& bp) {
    DIIIa d;
    d.pre = seg(bp.tau, 0, bp.l1);
    d.mid = seg(bp.tau, bp.l1, bp.l2);
    d.post = seg(bp.tau, bp.l2, static_cast<int>(bp.tau.size()));
    d.k1 = c.dv.e[0] + c.dv.e[bp.h[0] - 1] - 1 + sum_orders(c, d.pre);
    d.k2 = c.dv.e[1] + c.dv.e[bp.h[1] - 1] - 1 + sum_orders(c, d.mid);
    return d;
}

struct DIIIb {
    std::vector<int> pre, mid, post;
    int kap = 0, Cs = 0;
};
DIIIb diiib_data(const Ctx& c, const BoundaryPoint& bp) {
    DIIIb d;
    d.pre = seg(bp.tau, 0, bp.l1);
    d.mid = seg(bp.tau, bp.l1, bp.l2);
    d.post = seg(bp.tau, bp.l2, static_cast<int>(bp.tau.size()));
    d.kap = c.dv.e[bp.h[0] - 1] + c.dv.e[bp.h[2] - 1] + c.dv.e[bp.h[3] - 1] - 1 +
            sum_orders(c, d.pre) + sum_orders(c, d.mid);
    d.Cs = bp.C;
    return d;
}

struct DIIIc {
    std::vector<int> pre, mid, post;
    int kap = 0, Cs = 0;
};
DIIIc diiic_data(const Ctx& c, const BoundaryPoint& bp) {
    DIIIc d;
    d.pre = seg(bp.tau, 0, bp.l1);
    d.mid = seg(bp.tau, bp.l1, bp.l2);
    d.post = seg(bp.tau, bp.l2, static_cast<int>(bp.tau.size()));
    d.kap = c.dv.e[bp.h[0] - 1] + c.dv.e[bp.h[1] - 1] + sum_orders(c, d.pre) - 1;
    d.Cs = bp.C;
    return d;
}

struct AI {
    std::vector<int> top, bot;
    int kap = 0, Cs = 0, Ds = 0;
};
AI ai_data(const Ctx& c, const BoundaryPoint& bp) {
    AI d;
    d.top = seg(bp.tau, 0, bp.l1);
    d.bot = seg(bp.tau, bp.l1, static_cast<int>(bp.tau.size()));
    int s = 0;
    for (int l : d.top) s += Dof(c, bp, l);
    d.kap = s;
    d.Cs = bp.C;
    int sd = 0;
    for (int l : d.bot) sd += Dof(c, bp, l);
    d.Ds = c.av.a[bp.h[1] - 1] + 1 - sd;
    return d;
}

} // namespace

std::string btype_name(BType t) {
    switch (t) {
    case BType::B_I: return "B-I";
    case BType::B_IIIa: return "B-IIIa";
    case BType::B_IIIb: return "B-IIIb";
    case BType::B_IIIc: return "B-IIIc";
    case BType::C_III: return "C-III";
    case BType::D_IIIa: return "D-IIIa";
    case BType::D_IIIb: return "D-IIIb";
    case BType::D_IIIc: return "D-IIIc";
    case BType::A_I: return "A-I";
    }
    return "?";
}

int num_nodes(BType t) { return (t == BType::B_IIIa || t == BType::D_IIIa) ? 2 : 1; }

std::string key(const BoundaryPoint& bp) {
    std::ostringstream os;
    os << btype_name(bp.type) << ";h=";
    for (int x : bp.h) os << x << ",";
    os << ";l=" << bp.l1 << "," << bp.l2 << ";tau=";
    for (int x : bp.tau) os << x << ",";
    os << ";C=" << bp.C << ";Cv=";
    for (int x : bp.Cvec) os << x << ",";
    os << ";pr=" << bp.pr[0] << "," << bp.pr[1];
    return os.str();
}

std::array<int, 2> canonical_prong_class(int u, int v, int k1, int k2) {
    u = imod(u, k1);
    v = imod(v, k2);
    int best = -1;
    for (int t = 0; t < std::lcm(k1, k2); ++t) {
        if (imod(u + t, k1) != 0) continue;
        int w = imod(v - t, k2);
        if (best < 0 || w < best) best = w;
    }
    return {0, best};
}

void validate_boundary(const Signature& sig, const BoundaryPoint& bp) {
    Ctx c = make_ctx(sig);
    int nr = static_cast<int>(c.rlabels.size());
    req(static_cast<int>(bp.tau.size()) == nr, "tau must arrange all residueless poles");
    {
        std::vector<int> sorted = bp.tau;
        std::sort(sorted.begin(), sorted.end());
        req(sorted == c.rlabels, "tau must be a permutation of the residueless labels");
    }
    req(static_cast<int>(bp.Cvec.size()) == nr, "Cvec size mismatch");
    for (int i = 0; i < nr; ++i)
        req(bp.Cvec[static_cast<size_t>(i)] >= 1 &&
                bp.Cvec[static_cast<size_t>(i)] <= c.rorders[static_cast<size_t>(i)] - 1,
            "residueless angle out of range");

    auto req_l2_eq_l1 = [&] { req(bp.l2 == bp.l1, "l2 unused by this type; must equal l1"); };
    auto req_kappa = [&](std::vector<int> expect) {
        for (int k : expect) req(k >= 1, "node enhancement must be positive");
        req(bp.kappa == expect, "kappa must match the derived enhancement(s)");
    };
    auto req_no_pr = [&] { req(bp.pr == std::array<int, 2>{0, 0}, "pr unused by this type"); };

    switch (bp.type) {
    case BType::B_I: {
        req(c.fam == Family::B, "type/family mismatch");
        req(bp.h.empty(), "B-I carries no h tuple");
        req(bp.l1 >= 0 && bp.l1 <= nr, "l1 out of range");
        req_l2_eq_l1();
        BI d = bi_data(c, bp);
        req(d.Cs >= 1 && d.Ds >= 1, "node pole angles must be positive");
        req(c.bv.a1 + 1 == d.Cs + sum_C(c, bp, d.bot), "bottom cycle does not close up at z1");
        req_kappa({d.kap});
        req_no_pr();
        break;
    }
    case BType::B_IIIa: {
        req(c.fam == Family::B, "type/family mismatch");
        req(bp.h.size() == 2 && ((bp.h[0] == 1 && bp.h[1] == 2) || (bp.h[0] == 2 && bp.h[1] == 1)),
            "B-IIIa h must be (1,2) or (2,1)");
        req(bp.l1 >= 0 && bp.l1 < bp.l2 && bp.l2 <= nr, "need 0 <= l1 < l2 <= n-2");
        BIIIa d = biiia_data(c, bp);
        req(d.k1 >= 1 && d.k2 >= 1, "node enhancements must be positive");
        req(sum_C(c, bp, d.mid) == d.k1, "top cycle does not close up at the first node zero");
        req(is_min_first(d.mid), "top cycle rotation not canonical");
        req(bp.C == 0, "B-IIIa carries no scalar angle");
        req_kappa({d.k1, d.k2});
        req(bp.pr == canonical_prong_class(bp.pr[0], bp.pr[1], d.k1, d.k2), "pr not canonical");
        break;
    }
    case BType::B_IIIb: {
        req(c.fam == Family::B, "type/family mismatch");
        req(bp.h.size() == 2 && bp.h[0] >= 1 && bp.h[0] <= 2 && bp.h[1] >= 1 && bp.h[1] <= 2,
            "B-IIIb h must pick the top zero and top pair pole");
        req(bp.l1 >= 0 && bp.l1 <= nr, "l1 out of range");
        req_l2_eq_l1();
        BIIIb d = biiib_data(c, bp);
        int derived = d.e_qt - 1 - d.a_zt;
        for (int l : d.top) derived += Dof(c, bp, l);
        req(d.Cs == derived, "top cycle does not close up at the top zero");
        req(d.Cs >= 1 && d.Cs <= d.e_qt - 1, "top pair-pole angle out of range");
        req_kappa({d.kap});
        req_no_pr();
        break;
    }
    case BType::B_IIIc: {
        req(c.fam == Family::B, "type/family mismatch");
        req(bp.h.size() == 2 && ((bp.h[0] == 1 && bp.h[1] == 2) || (bp.h[0] == 2 && bp.h[1] == 1)),
            "B-IIIc h must be (1,2) or (2,1)");
        req(bp.l1 >= 0 && bp.l1 < bp.l2 && bp.l2 <= nr, "need 0 <= l1 < l2 <= n-2");
        BIIIc d = biiic_data(c, bp);
        int sd = 0;
        for (int l : d.mid) sd += Dof(c, bp, l);
        req(sd == d.a_top + 1, "top cycle does not close up at the top zero");
        req(d.Cs >= 1 && d.Cs <= d.kap, "node pole angle out of range");
        req(is_min_first(d.mid), "top cycle rotation not canonical");
        req_kappa({d.kap});
        req_no_pr();
        break;
    }
    case BType::C_III: {
        req(c.fam == Family::C, "type/family mismatch");
        req(bp.h.size() == 3 && bp.h[0] < bp.h[1], "C-III h not canonical");
        {
            std::vector<int> hs = bp.h;
            std::sort(hs.begin(), hs.end());
            req(hs == std::vector<int>{1, 2, 3}, "C-III h must partition the triple");
        }
        req(bp.l1 >= 0 && bp.l1 <= nr, "l1 out of range");
        req_l2_eq_l1();
        CIII d = ciii_data(c, bp);
        req(bp.C == 0, "C-III carries no scalar angle");
        req_kappa({d.kap});
        req_no_pr();
        break;
    }
    case BType::D_IIIa: {
        req(c.fam == Family::D, "type/family mismatch");
        req(bp.h.size() == 2 && ((bp.h[0] == 3 && bp.h[1] == 4) || (bp.h[0] == 4 && bp.h[1] == 3)),
            "D-IIIa h must be (3,4) or (4,3)");
        req(bp.l1 >= 0 && bp.l1 <= bp.l2 && bp.l2 <= nr, "need 0 <= l1 <= l2 <= n-4");
        DIIIa d = diiia_data(c, bp);
        req(bp.C == 0, "D-IIIa carries no scalar angle");
        req_kappa({d.k1, d.k2});
        req(bp.pr == canonical_prong_class(bp.pr[0], bp.pr[1], d.k1, d.k2), "pr not canonical");
        break;
    }
    case BType::D_IIIb: {
        req(c.fam == Family::D, "type/family mismatch");
        req(bp.h.size() == 4, "D-IIIb h size");
        {
            std::set<int> p12{bp.h[0], bp.h[1]};
            bool split12 = p12 == std::set<int>{1, 2};
            bool split34 = p12 == std::set<int>{3, 4};
            req(split12 || split34, "D-IIIb first two h entries must form a residue pair");
            req(bp.h[2] < bp.h[3] &&
                    std::set<int>{bp.h[2], bp.h[3]} == (split12 ? std::set<int>{3, 4} : std::set<int>{1, 2}),
                "D-IIIb capping pair not canonical");
        }
        req(bp.l1 >= 0 && bp.l1 <= bp.l2 && bp.l2 <= nr, "need 0 <= l1 <= l2 <= n-4");
        DIIIb d = diiib_data(c, bp);
        int e1h = c.dv.e[bp.h[0] - 1];
        req(e1h >= 2 && d.Cs >= 1 && d.Cs <= e1h - 1, "split pair-pole angle out of range");
        req_kappa({d.kap});
        req_no_pr();
        break;
    }
    case BType::D_IIIc: {
        req(c.fam == Family::D, "type/family mismatch");
        req(bp.h.size() == 4 && bp.h[0] < bp.h[1] && bp.h[2] < bp.h[3], "D-IIIc h not canonical");
        {
            std::set<int> top{bp.h[0], bp.h[1]};
            req((top == std::set<int>{1, 2} && bp.h[2] == 3 && bp.h[3] == 4) ||
                    (top == std::set<int>{3, 4} && bp.h[2] == 1 && bp.h[3] == 2),
                "D-IIIc h must split the two residue pairs by level");
        }
        req(bp.l1 >= 0 && bp.l1 <= bp.l2 && bp.l2 <= nr, "need 0 <= l1 <= l2 <= n-4");
        DIIIc d = diiic_data(c, bp);
        req(d.Cs >= 1 && d.Cs <= d.kap, "node pole angle out of range");
        req_kappa({d.kap});
        req_no_pr();
        break;
    }
    case BType::A_I: {
        req(c.fam == Family::A, "type/family mismatch");
        req(bp.h.size() == 3 && bp.h[0] < bp.h[1], "A-I h not canonical");
        {
            std::vector<int> hs = bp.h;
            std::sort(hs.begin(), hs.end());
            req(hs == std::vector<int>{1, 2, 3}, "A-I h must partition the zeros");
        }
        req(bp.l1 >= 1 && bp.l1 <= nr, "top cycle needs at least one pole");
        req_l2_eq_l1();
        AI d = ai_data(c, bp);
        req(sum_C(c, bp, d.top) == c.av.a[bp.h[2] - 1] + 1, "top cycle does not close up");
        req(d.Cs >= 1 && d.Ds >= 1, "node pole angles must be positive");
        req(d.Cs + sum_C(c, bp, d.bot) == c.av.a[bp.h[0] - 1] + 1, "bottom cycle does not close up");
        req(is_min_first(d.top), "top cycle rotation not canonical");
        req_kappa({d.kap});
        req_no_pr();
        break;
    }
    }
}

Model materialize(const Signature& sig, const BoundaryPoint& bp) {
    validate_boundary(sig, bp);
    Ctx c = make_ctx(sig);
    Model m;
    m.pole_end.assign(static_cast<size_t>(sig.n()), -1);
    m.zero_vert.assign(static_cast<size_t>(sig.m()), -1);
    Dia& dia = m.dia;

    auto set_chain_poles = [&](const std::vector<int>& labels, const std::vector<int>& alphas,
                               int first_alpha) {
        // Chain pole i (1-based within this block) has face {out alpha_i, in
        // alpha_{i-1}}; record its out end.
        for (size_t i = 0; i < labels.size(); ++i)
            m.pole_end[static_cast<size_t>(labels[i] - 1)] =
                make_end(alphas[static_cast<size_t>(first_alpha) + i + 1], 0);
    };
    auto set_cycle_poles = [&](const std::vector<int>& labels, const std::vector<int>& gammas) {
        for (size_t i = 0; i < labels.size(); ++i)
            m.pole_end[static_cast<size_t>(labels[i] - 1)] = make_end(gammas[i], 0);
    };

    switch (bp.type) {
    case BType::B_I: {
        BI d = bi_data(c, bp);
        int zv = dia.add_vertex(d.kap - 1, 0);
        auto al = layout_z2(dia, zv, map_C(c, bp, d.top), map_D(c, bp, d.top), c.bv.e1, 1);
        int vA = dia.add_vertex(c.bv.a1, 1);
        int vB = dia.add_vertex(c.bv.a2, 2);
        auto Cb = map_C(c, bp, d.bot);
        auto Db = map_D(c, bp, d.bot);
        Cb.push_back(d.Cs);
        Db.push_back(d.Ds);
        auto gam = layout_z1(dia, vA, vB, Cb, Db, 0);
        int p = static_cast<int>(gam.size());
        m.nodes.push_back({zv, make_end(gam[static_cast<size_t>((p + p - 2) % p)], 1), d.kap,
                           2 * d.kap - 2, 0, 1});
        m.pole_end[static_cast<size_t>(c.bv.q1 - 1)] = make_end(al[0], 0);
        m.pole_end[static_cast<size_t>(c.bv.q2 - 1)] = make_end(al.back(), 1);
        set_chain_poles(d.top, al, 0);
        set_cycle_poles(d.bot, gam);
        m.zero_vert = {vA, vB};
        break;
    }
    case BType::B_IIIa: {
        BIIIa d = biiia_data(c, bp);
        int a_h1 = bp.h[0] == 1 ? c.bv.a1 : c.bv.a2;
        int a_h2 = bp.h[0] == 1 ? c.bv.a2 : c.bv.a1;
        int v1 = dia.add_vertex(a_h1, bp.h[0]);
        auto al1 = layout_z2(dia, v1, map_C(c, bp, d.pre), map_D(c, bp, d.pre), c.bv.e1, 0);
        int v2 = dia.add_vertex(a_h2, bp.h[1]);
        auto al2 = layout_z2(dia, v2, map_C(c, bp, d.post), map_D(c, bp, d.post), d.k2 + 1, 0);
        int s1 = dia.add_vertex(d.k1 - 1, 0);
        int s2 = dia.add_vertex(d.k2 - 1, 0);
        auto gam = layout_z1(dia, s1, s2, map_C(c, bp, d.mid), map_D(c, bp, d.mid), 1);
        m.nodes.push_back({s1, make_end(al1.back(), 1), d.k1, 0, 0, 1});
        m.nodes.push_back({s2, make_end(al2[0], 0), d.k2, 0, -1, -1});
        m.pole_end[static_cast<size_t>(c.bv.q1 - 1)] = make_end(al1[0], 0);
        m.pole_end[static_cast<size_t>(c.bv.q2 - 1)] = make_end(al2.back(), 1);
        set_chain_poles(d.pre, al1, 0);
        set_chain_poles(d.post, al2, 0);
        set_cycle_poles(d.mid, gam);
        m.zero_vert[static_cast<size_t>(bp.h[0] - 1)] = v1;
        m.zero_vert[static_cast<size_t>(bp.h[1] - 1)] = v2;
        break;
    }
    case BType::B_IIIb: {
        BIIIb d = biiib_data(c, bp);
        int zb = 3 - bp.h[0];
        int vzb = dia.add_vertex(d.a_zb, zb);
        auto al = layout_z2(dia, vzb, map_C(c, bp, d.bot), map_D(c, bp, d.bot), d.e_qb, 0);
        int nv = dia.add_vertex(d.kap - 1, 0);
        int vzt = dia.add_vertex(d.a_zt, bp.h[0]);
        auto Ct = map_C(c, bp, d.top);
        auto Dt = map_D(c, bp, d.top);
        Ct.insert(Ct.begin(), d.Cs);
        Dt.insert(Dt.begin(), d.e_qt - d.Cs);
        auto gam = layout_z1(dia, nv, vzt, Ct, Dt, 1);
        m.nodes.push_back({nv, make_end(al.back(), 1), d.kap, 0, 0, 1});
        m.pole_end[static_cast<size_t>(d.qb_label - 1)] = make_end(al[0], 0);
        m.pole_end[static_cast<size_t>(d.qt_label - 1)] = make_end(gam[0], 0);
        set_chain_poles(d.bot, al, 0);
        for (size_t i = 0; i < d.top.size(); ++i)
            m.pole_end[static_cast<size_t>(d.top[i] - 1)] = make_end(gam[i + 1], 0);
        m.zero_vert[static_cast<size_t>(zb - 1)] = vzb;
        m.zero_vert[static_cast<size_t>(bp.h[0] - 1)] = vzt;
        break;
    }
    case BType::B_IIIc: {
        BIIIc d = biiic_data(c, bp);
        int vz = dia.add_vertex(d.a_bot, bp.h[0]);
        auto Cb = map_C(c, bp, d.pre);
        auto Db = map_D(c, bp, d.pre);
        Cb.push_back(d.Cs);
        Db.push_back(d.kap + 1 - d.Cs);
        auto Cpost = map_C(c, bp, d.post);
        auto Dpost = map_D(c, bp, d.post);
        Cb.insert(Cb.end(), Cpost.begin(), Cpost.end());
        Db.insert(Db.end(), Dpost.begin(), Dpost.end());
        auto al = layout_z2(dia, vz, Cb, Db, c.bv.e1, 0);
        int nv = dia.add_vertex(d.kap - 1, 0);
        int vzt = dia.add_vertex(d.a_top, bp.h[1]);
        auto gam = layout_z1(dia, nv, vzt, map_C(c, bp, d.mid), map_D(c, bp, d.mid), 1);
        m.nodes.push_back({nv, make_end(al[static_cast<size_t>(bp.l1)], 1), d.kap, 0, 0, 1});
        m.pole_end[static_cast<size_t>(c.bv.q1 - 1)] = make_end(al[0], 0);
        m.pole_end[static_cast<size_t>(c.bv.q2 - 1)] = make_end(al.back(), 1);
        set_chain_poles(d.pre, al, 0);
        for (size_t i = 0; i < d.post.size(); ++i)
            m.pole_end[static_cast<size_t>(d.post[i] - 1)] =
                make_end(al[static_cast<size_t>(bp.l1) + 2 + i], 0);
        set_cycle_poles(d.mid, gam);
        m.zero_vert[static_cast<size_t>(bp.h[0] - 1)] = vz;
        m.zero_vert[static_cast<size_t>(bp.h[1] - 1)] = vzt;
        break;
    }
    case BType::C_III: {
        CIII d = ciii_data(c, bp);
        int nv = dia.add_vertex(d.kap - 1, 0);
        auto alT = layout_z2(dia, nv, map_C(c, bp, d.top), map_D(c, bp, d.top),
                             c.cv.e[bp.h[0] - 1], 1);
        int vz = dia.add_vertex(c.cv.a, 1);
        auto alB = layout_z2(dia, vz, map_C(c, bp, d.bot), map_D(c, bp, d.bot), d.kap + 1, 0);
        m.nodes.push_back({nv, make_end(alB[0], 0), d.kap, 1, -2, 1});
        m.pole_end[static_cast<size_t>(c.cv.q[bp.h[0] - 1] - 1)] = make_end(alT[0], 0);
        m.pole_end[static_cast<size_t>(c.cv.q[bp.h[1] - 1] - 1)] = make_end(alT.back(), 1);
        m.pole_end[static_cast<size_t>(c.cv.q[bp.h[2] - 1] - 1)] = make_end(alB.back(), 1);
        set_chain_poles(d.top, alT, 0);
        set_chain_poles(d.bot, alB, 0);
        m.zero_vert = {vz};
        break;
    }
    case BType::D_IIIa: {
        DIIIa d = diiia_data(c, bp);
        int n1 = dia.add_vertex(d.k1 - 1, 0);
        auto al1 = layout_z2(dia, n1, map_C(c, bp, d.pre), map_D(c, bp, d.pre), c.dv.e[0], 1);
        int n2 = dia.add_vertex(d.k2 - 1, 0);
        auto al2 = layout_z2(dia, n2, map_C(c, bp, d.mid), map_D(c, bp, d.mid),
                             c.dv.e[bp.h[1] - 1], 1);
        int vz = dia.add_vertex(c.dv.a, 1);
        auto alB = layout_z2(dia, vz, map_C(c, bp, d.post), map_D(c, bp, d.post), d.k1 + 1, 0);
        int dsum = 0;
        for (int l : d.mid) dsum += Dof(c, bp, l);
        int s0_2 = imod(1 - 2 * (c.dv.e[bp.h[1] - 1] + dsum), 2 * d.k2);
        m.nodes.push_back({n1, make_end(alB[0], 0), d.k1, 2 * d.k1 - 1, 0, 1});
        m.nodes.push_back({n2, make_end(alB.back(), 1), d.k2, 2 * d.k2 - 1, s0_2, -1});
        m.pole_end[static_cast<size_t>(c.dv.q[0] - 1)] = make_end(al1[0], 0);
        m.pole_end[static_cast<size_t>(c.dv.q[bp.h[0] - 1] - 1)] = make_end(al1.back(), 1);
        m.pole_end[static_cast<size_t>(c.dv.q[bp.h[1] - 1] - 1)] = make_end(al2[0], 0);
        m.pole_end[static_cast<size_t>(c.dv.q[1] - 1)] = make_end(al2.back(), 1);
        set_chain_poles(d.pre, al1, 0);
        set_chain_poles(d.mid, al2, 0);
        set_chain_poles(d.post, alB, 0);
        m.zero_vert = {vz};
        break;
    }
    case BType::D_IIIb: {
        DIIIb d = diiib_data(c, bp);
        int nv = dia.add_vertex(d.kap - 1, 0);
        auto Ct = map_C(c, bp, d.pre);
        auto Dt = map_D(c, bp, d.pre);
        Ct.push_back(d.Cs);
        Dt.push_back(c.dv.e[bp.h[0] - 1] - d.Cs);
        auto Cm = map_C(c, bp, d.mid);
        auto Dm = map_D(c, bp, d.mid);
        Ct.insert(Ct.end(), Cm.begin(), Cm.end());
        Dt.insert(Dt.end(), Dm.begin(), Dm.end());
        auto alT = layout_z2(dia, nv, Ct, Dt, c.dv.e[bp.h[2] - 1], 1);
        int vz = dia.add_vertex(c.dv.a, 1);
        auto alB = layout_z2(dia, vz, map_C(c, bp, d.post), map_D(c, bp, d.post),
                             c.dv.e[bp.h[1] - 1], 0);
        m.nodes.push_back({nv, make_end(alB.back(), 1), d.kap, 0, 0, 1});
        m.pole_end[static_cast<size_t>(c.dv.q[bp.h[2] - 1] - 1)] = make_end(alT[0], 0);
        m.pole_end[static_cast<size_t>(c.dv.q[bp.h[3] - 1] - 1)] = make_end(alT.back(), 1);
        m.pole_end[static_cast<size_t>(c.dv.q[bp.h[0] - 1] - 1)] =
            make_end(alT[static_cast<size_t>(bp.l1) + 1], 0);
        m.pole_end[static_cast<size_t>(c.dv.q[bp.h[1] - 1] - 1)] = make_end(alB[0], 0);
        set_chain_poles(d.pre, alT, 0);
        for (size_t i = 0; i < d.mid.size(); ++i)
            m.pole_end[static_cast<size_t>(d.mid[i] - 1)] =
                make_end(alT[static_cast<size_t>(bp.l1) + 2 + i], 0);
        set_chain_poles(d.post, alB, 0);
        m.zero_vert = {vz};
        break;
    }
    case BType::D_IIIc: {
        DIIIc d = diiic_data(c, bp);
        int nv = dia.add_vertex(d.kap - 1, 0);
        auto alT = layout_z2(dia, nv, map_C(c, bp, d.pre), map_D(c, bp, d.pre),
                             c.dv.e[bp.h[0] - 1], 1);
        int vz = dia.add_vertex(c.dv.a, 1);
        auto Cb = map_C(c, bp, d.mid);
        auto Db = map_D(c, bp, d.mid);
        Cb.push_back(d.Cs);
        Db.push_back(d.kap + 1 - d.Cs);
        auto Cpost = map_C(c, bp, d.post);
        auto Dpost = map_D(c, bp, d.post);
        Cb.insert(Cb.end(), Cpost.begin(), Cpost.end());
        Db.insert(Db.end(), Dpost.begin(), Dpost.end());
        auto alB = layout_z2(dia, vz, Cb, Db, c.dv.e[bp.h[2] - 1], 0);
        int mpos = bp.l2 - bp.l1 + 1;
        m.nodes.push_back({nv, make_end(alB[static_cast<size_t>(mpos) - 1], 1), d.kap, 0, 0, 1});
        m.pole_end[static_cast<size_t>(c.dv.q[bp.h[0] - 1] - 1)] = make_end(alT[0], 0);
        m.pole_end[static_cast<size_t>(c.dv.q[bp.h[1] - 1] - 1)] = make_end(alT.back(), 1);
        m.pole_end[static_cast<size_t>(c.dv.q[bp.h[2] - 1] - 1)] = make_end(alB[0], 0);
        m.pole_end[static_cast<size_t>(c.dv.q[bp.h[3] - 1] - 1)] = make_end(alB.back(), 1);
        set_chain_poles(d.pre, alT, 0);
        for (size_t i = 0; i < d.mid.size(); ++i)
            m.pole_end[static_cast<size_t>(d.mid[i] - 1)] = make_end(alB[i + 1], 0);
        for (size_t i = 0; i < d.post.size(); ++i)
            m.pole_end[static_cast<size_t>(d.post[i] - 1)] =
                make_end(alB[static_cast<size_t>(mpos) + 1 + i], 0);
        m.zero_vert = {vz};
        break;
    }
    case BType::A_I: {
        AI d = ai_data(c, bp);
        int v3 = dia.add_vertex(c.av.a[bp.h[2] - 1], bp.h[2]);
        int nv = dia.add_vertex(d.kap - 1, 0);
        auto gamT = layout_z1(dia, v3, nv, map_C(c, bp, d.top), map_D(c, bp, d.top), 1);
        int v1 = dia.add_vertex(c.av.a[bp.h[0] - 1], bp.h[0]);
        int v2 = dia.add_vertex(c.av.a[bp.h[1] - 1], bp.h[1]);
        auto Cb = map_C(c, bp, d.bot);
        auto Db = map_D(c, bp, d.bot);
        Cb.push_back(d.Cs);
        Db.push_back(d.Ds);
        auto gamB = layout_z1(dia, v1, v2, Cb, Db, 0);
        int p = static_cast<int>(gamB.size());
        m.nodes.push_back({nv, make_end(gamB[static_cast<size_t>((p + p - 2) % p)], 1), d.kap,
                           2 * d.kap - 2, 0, 1});
        set_cycle_poles(d.top, gamT);
        set_cycle_poles(d.bot, gamB);
        m.zero_vert[static_cast<size_t>(bp.h[0] - 1)] = v1;
        m.zero_vert[static_cast<size_t>(bp.h[1] - 1)] = v2;
        m.zero_vert[static_cast<size_t>(bp.h[2] - 1)] = v3;
        break;
    }
    }
    validate(m.dia);
    return m;
}

ArcSurface plumb(const Model& m, const std::vector<int>& labels) {
    if (labels.size() != m.nodes.size()) throw ValidationError("one label per node required");
    int eps = labels[0] & 1;
    for (int l : labels)
        if ((l & 1) != eps) throw ValidationError("node labels must share parity");

    ArcSurface out;
    out.dia = m.dia;
    out.pole_end = m.pole_end;
    out.zero_vert = m.zero_vert;
    Dia& dia = out.dia;

    // Face circuits of the node pole faces, on the undisturbed diagram.
    std::vector<std::vector<std::pair<int, int>>> circs;
    for (const auto& nd : m.nodes) {
        circs.push_back(face_circuit(m.dia, nd.face_end));
        if (static_cast<int>(circs.back().size()) != 2 * nd.kappa)
            throw InconsistencyError("node pole face has wrong circuit length");
    }

    // A half-step rotates the whole top level by one slot; marked top zeros
    // rotate in place, node ends absorb the rotation into the threading.
    if (eps) {
        std::set<int> node_verts;
        for (const auto& nd : m.nodes) node_verts.insert(nd.zero_vert);
        for (int v = 0; v < static_cast<int>(dia.verts.size()); ++v) {
            if (node_verts.count(v)) continue;
            bool top = true, any = false;
            for (const auto& e : dia.edges)
                for (int side = 0; side < 2; ++side)
                    if (e.vert[static_cast<size_t>(side)] == v) {
                        any = true;
                        top = top && e.cls == 1;
                    }
            if (!any || !top) continue;
            int slots = dia.verts[static_cast<size_t>(v)].slots();
            for (auto& e : dia.edges)
                for (int side = 0; side < 2; ++side)
                    if (e.vert[static_cast<size_t>(side)] == v)
                        e.slot[static_cast<size_t>(side)] =
                            imod(e.slot[static_cast<size_t>(side)] + kMarkedShift, slots);
        }
    }

    for (size_t i = 0; i < m.nodes.size(); ++i) {
        const auto& nd = m.nodes[i];
        for (auto [s, h] : star(m.dia, nd.zero_vert)) {
            int q = imod(nd.A_idx - (s - nd.s0 - nd.dir_top * labels[i]), 2 * nd.kappa);
            auto [v, slot] = circs[i][static_cast<size_t>(q)];
            dia.move_end(h, v, slot);
        }
    }

    // Drop the now-isolated node zero vertices.
    std::vector<int> remap(dia.verts.size(), -1);
    std::set<int> node_verts;
    for (const auto& nd : m.nodes) node_verts.insert(nd.zero_vert);
    Dia compact;
    for (int v = 0; v < static_cast<int>(dia.verts.size()); ++v) {
        if (node_verts.count(v)) continue;
        remap[static_cast<size_t>(v)] = compact.add_vertex(dia.verts[static_cast<size_t>(v)].order,
                                                           dia.verts[static_cast<size_t>(v)].zero);
    }
    compact.edges = dia.edges;
    for (auto& e : compact.edges)
        for (int side = 0; side < 2; ++side) {
            int nv = remap[static_cast<size_t>(e.vert[static_cast<size_t>(side)])];
            if (nv < 0) throw InconsistencyError("node zero still carries ends after plumbing");
            e.vert[static_cast<size_t>(side)] = nv;
        }
    out.dia = compact;
    for (auto& v : out.zero_vert) v = remap[static_cast<size_t>(v)];
    validate(out.dia);
    return out;
}

std::vector<int> face_blocks(const Signature& sig, const ArcSurface& s) {
    auto fs = faces(s.dia);
    std::vector<int> label_block(static_cast<size_t>(sig.n()), -1);
    for (int b = 0; b < sig.r(); ++b)
        for (int l : sig.blocks[static_cast<size_t>(b)]) label_block[static_cast<size_t>(l - 1)] = b;
    std::vector<int> blocks(fs.size(), -1);
    for (int j = 1; j <= sig.n(); ++j) {
        int h = s.pole_end[static_cast<size_t>(j - 1)];
        int face = -1;
        for (size_t f = 0; f < fs.size(); ++f)
            if (std::find(fs[f].begin(), fs[f].end(), h) != fs[f].end()) face = static_cast<int>(f);
        if (face < 0 || blocks[static_cast<size_t>(face)] >= 0)
            throw InconsistencyError("pole faces of the arc surface are not in bijection with poles");
        blocks[static_cast<size_t>(face)] = label_block[static_cast<size_t>(j - 1)];
    }
    for (int b : blocks)
        if (b < 0) throw InconsistencyError("arc surface has an unlabeled face");
    return blocks;
}

RayPair arc_rays(const Signature& sig, const ArcSurface& s) {
    auto rays = degeneration_rays(s.dia, face_blocks(sig, s));
    auto zero_set = [&](const std::vector<long long>& r) {
        std::set<int> z;
        for (int e = 0; e < static_cast<int>(r.size()); ++e)
            if (r[static_cast<size_t>(e)] == 0) z.insert(e);
        return z;
    };
    std::set<int> cls0;
    for (int e = 0; e < static_cast<int>(s.dia.edges.size()); ++e)
        if (s.dia.edges[static_cast<size_t>(e)].cls == 0) cls0.insert(e);
    if (zero_set(rays[0]) == cls0) return {rays[0], rays[1]};
    if (zero_set(rays[1]) == cls0) return {rays[1], rays[0]};
    throw InconsistencyError("neither degeneration ray shrinks exactly the reference class");
}

PB canonical_point(const Signature& sig, const BoundaryPoint& bp, const std::vector<int>& labels) {
    ArcSurface s = plumb(materialize(sig, bp), labels);
    return recognize(sig, s, arc_rays(sig, s).near);
}

PB u_move(const Signature& sig, const BoundaryPoint& bp, const std::vector<int>& labels) {
    ArcSurface s = plumb(materialize(sig, bp), labels);
    return recognize(sig, s, arc_rays(sig, s).far);
}

std::vector<std::vector<int>> star_labels(const BoundaryPoint& bp) {
    std::vector<std::vector<int>> out;
    if (num_nodes(bp.type) == 1) {
        for (int l = 0; l < 2 * bp.kappa[0]; ++l) out.push_back({l});
        return out;
    }
    int k1 = bp.kappa[0], k2 = bp.kappa[1];
    bool bfam = bp.type == BType::B_IIIa;
    for (int eps = 0; eps <= 1; ++eps)
        for (int t = 0; t < std::lcm(k1, k2); ++t) {
            int u = imod(bp.pr[0] + t, k1);
            int v = imod(bp.pr[1] - t, k2);
            if (bfam)
                out.push_back({imod(2 * u + eps, 2 * k1), imod(2 * v - eps, 2 * k2)});
            else
                out.push_back({imod(2 * u - eps, 2 * k1), imod(2 * v + eps, 2 * k2)});
        }
    return out;
}

std::vector<int> r_move_label(const BoundaryPoint& bp, const std::vector<int>& labels) {
    if (num_nodes(bp.type) == 1) return {imod(labels[0] + 1, 2 * bp.kappa[0])};
    return {imod(labels[0] + 1, 2 * bp.kappa[0]), imod(labels[1] - 1, 2 * bp.kappa[1])};
}

// -------------------------------------------------------------------------
// Enumeration.
// -------------------------------------------------------------------------

namespace {

// Iterate all angle assignments 1 <= Cvec[i] <= b_i - 1.
template <typename F>
void for_each_angles(const std::vector<int>& orders, F&& f) {
    std::vector<int> C(orders.size(), 1);
    for (int o : orders)
        if (o < 2) return; // a simple residueless pole admits no cylinder
    while (true) {
        f(C);
        size_t i = 0;
        for (; i < C.size(); ++i) {
            if (C[i] < orders[i] - 1) {
                ++C[i];
                break;
            }
            C[i] = 1;
        }
        if (i == C.size()) break;
        if (C.empty()) break;
    }
}

template <typename F>
void for_each_perm(std::vector<int> labels, F&& f) {
    std::sort(labels.begin(), labels.end());
    do {
        f(labels);
    } while (std::next_permutation(labels.begin(), labels.end()));
}

} // namespace

std::vector<BoundaryPoint> enumerate_boundaries(const Signature& sig) {
    Ctx c = make_ctx(sig);
    int nr = static_cast<int>(c.rlabels.size());
    std::vector<BoundaryPoint> out;

    auto emit = [&](BoundaryPoint bp) {
        validate_boundary(sig, bp);
        out.push_back(std::move(bp));
    };
    auto try_emit = [&](BoundaryPoint bp) {
        try {
            validate_boundary(sig, bp);
        } catch (const ValidationError&) {
            return;
        }
        out.push_back(std::move(bp));
    };

    if (c.fam == Family::B) {
        for_each_perm(c.rlabels, [&](const std::vector<int>& tau) {
            for_each_angles(c.rorders, [&](const std::vector<int>& Cv) {
                BoundaryPoint base;
                base.tau = tau;
                base.Cvec = Cv;
                // B-I: the scalar is forced by the closure of the bottom cycle.
                for (int l = 0; l <= nr; ++l) {
                    BoundaryPoint bp = base;
                    bp.type = BType::B_I;
                    bp.l1 = bp.l2 = l;
                    BI d = bi_data(c, bp);
                    bp.C = c.bv.a1 + 1 - sum_C(c, bp, d.bot);
                    d = bi_data(c, bp);
                    if (bp.C < 1 || d.Ds < 1) continue;
                    bp.kappa = {d.kap};
                    emit(bp);
                }
                // B-IIIa.
                for (auto h : {std::vector<int>{1, 2}, std::vector<int>{2, 1}})
                    for (int l1 = 0; l1 < nr; ++l1)
                        for (int l2 = l1 + 1; l2 <= nr; ++l2) {
                            BoundaryPoint bp = base;
                            bp.type = BType::B_IIIa;
                            bp.h = h;
                            bp.l1 = l1;
                            bp.l2 = l2;
                            BIIIa d = biiia_data(c, bp);
                            if (d.k1 < 1 || d.k2 < 1) continue;
                            if (sum_C(c, bp, d.mid) != d.k1) continue;
                            if (!is_min_first(d.mid)) continue;
                            bp.kappa = {d.k1, d.k2};
                            int g = std::gcd(d.k1, d.k2);
                            for (int r = 0; r < g; ++r) {
                                bp.pr = {0, r};
                                emit(bp);
                            }
                        }
                // B-IIIb: the scalar is forced by the closure of the top cycle.
                for (int zt = 1; zt <= 2; ++zt)
                    for (int qt = 1; qt <= 2; ++qt)
                        for (int l = 0; l <= nr; ++l) {
                            BoundaryPoint bp = base;
                            bp.type = BType::B_IIIb;
                            bp.h = {zt, qt};
                            bp.l1 = bp.l2 = l;
                            BIIIb d = biiib_data(c, bp);
                            int Cs = d.e_qt - 1 - d.a_zt;
                            for (int lab : d.top) Cs += Dof(c, bp, lab);
                            if (Cs < 1 || Cs > d.e_qt - 1) continue;
                            bp.C = Cs;
                            d = biiib_data(c, bp);
                            if (d.kap < 1) continue;
                            bp.kappa = {d.kap};
                            emit(bp);
                        }
                // B-IIIc.
                for (auto h : {std::vector<int>{1, 2}, std::vector<int>{2, 1}})
                    for (int l1 = 0; l1 < nr; ++l1)
                        for (int l2 = l1 + 1; l2 <= nr; ++l2) {
                            BoundaryPoint bp = base;
                            bp.type = BType::B_IIIc;
                            bp.h = h;
                            bp.l1 = l1;
                            bp.l2 = l2;
                            BIIIc d = biiic_data(c, bp);
                            int sd = 0;
                            for (int lab : d.mid) sd += Dof(c, bp, lab);
                            if (sd != d.a_top + 1) continue;
                            if (!is_min_first(d.mid)) continue;
                            bp.kappa = {d.kap};
                            for (int Cs = 1; Cs <= d.kap; ++Cs) {
                                bp.C = Cs;
                                emit(bp);
                            }
                        }
            });
        });
    } else if (c.fam == Family::C) {
        for_each_perm(c.rlabels, [&](const std::vector<int>& tau) {
            for_each_angles(c.rorders, [&](const std::vector<int>& Cv) {
                for (auto h : {std::vector<int>{1, 2, 3}, std::vector<int>{1, 3, 2},
                               std::vector<int>{2, 3, 1}})
                    for (int l = 0; l <= nr; ++l) {
                        BoundaryPoint bp;
                        bp.type = BType::C_III;
                        bp.h = h;
                        bp.l1 = bp.l2 = l;
                        bp.tau = tau;
                        bp.Cvec = Cv;
                        CIII d = ciii_data(c, bp);
                        if (d.kap < 1) continue;
                        bp.kappa = {d.kap};
                        emit(bp);
                    }
            });
        });
    } else if (c.fam == Family::D) {
        for_each_perm(c.rlabels, [&](const std::vector<int>& tau) {
            for_each_angles(c.rorders, [&](const std::vector<int>& Cv) {
                BoundaryPoint base;
                base.tau = tau;
                base.Cvec = Cv;
                for (int l1 = 0; l1 <= nr; ++l1)
                    for (int l2 = l1; l2 <= nr; ++l2) {
                        // D-IIIa.
                        for (auto h : {std::vector<int>{3, 4}, std::vector<int>{4, 3}}) {
                            BoundaryPoint bp = base;
                            bp.type = BType::D_IIIa;
                            bp.h = h;
                            bp.l1 = l1;
                            bp.l2 = l2;
                            DIIIa d = diiia_data(c, bp);
                            bp.kappa = {d.k1, d.k2};
                            int g = std::gcd(d.k1, d.k2);
                            for (int r = 0; r < g; ++r) {
                                bp.pr = {0, r};
                                emit(bp);
                            }
                        }
                        // D-IIIb.
                        for (auto h : {std::vector<int>{1, 2, 3, 4}, std::vector<int>{2, 1, 3, 4},
                                       std::vector<int>{3, 4, 1, 2}, std::vector<int>{4, 3, 1, 2}}) {
                            int e1h = c.dv.e[static_cast<size_t>(h[0] - 1)];
                            if (e1h < 2) continue;
                            BoundaryPoint bp = base;
                            bp.type = BType::D_IIIb;
                            bp.h = h;
                            bp.l1 = l1;
                            bp.l2 = l2;
                            DIIIb d = diiib_data(c, bp);
                            bp.kappa = {d.kap};
                            for (int Cs = 1; Cs <= e1h - 1; ++Cs) {
                                bp.C = Cs;
                                emit(bp);
                            }
                        }
                        // D-IIIc.
                        for (auto h : {std::vector<int>{1, 2, 3, 4}, std::vector<int>{3, 4, 1, 2}}) {
                            BoundaryPoint bp = base;
                            bp.type = BType::D_IIIc;
                            bp.h = h;
                            bp.l1 = l1;
                            bp.l2 = l2;
                            DIIIc d = diiic_data(c, bp);
                            bp.kappa = {d.kap};
                            for (int Cs = 1; Cs <= d.kap; ++Cs) {
                                bp.C = Cs;
                                emit(bp);
                            }
                        }
                    }
            });
        });
    } else {
        for_each_perm(c.rlabels, [&](const std::vector<int>& tau) {
            for_each_angles(c.rorders, [&](const std::vector<int>& Cv) {
                for (auto h : {std::vector<int>{1, 2, 3}, std::vector<int>{1, 3, 2},
                               std::vector<int>{2, 3, 1}})
                    for (int l = 1; l <= nr; ++l) {
                        BoundaryPoint bp;
                        bp.type = BType::A_I;
                        bp.h = h;
                        bp.l1 = bp.l2 = l;
                        bp.tau = tau;
                        bp.Cvec = Cv;
                        AI d = ai_data(c, bp);
                        if (!is_min_first(d.top)) continue;
                        if (sum_C(c, bp, d.top) != c.av.a[static_cast<size_t>(h[2] - 1)] + 1)
                            continue;
                        bp.C = c.av.a[static_cast<size_t>(h[0] - 1)] + 1 - sum_C(c, bp, d.bot);
                        d = ai_data(c, bp);
                        if (bp.C < 1 || d.Ds < 1 || d.kap < 1) continue;
                        bp.kappa = {d.kap};
                        try_emit(bp);
                    }
            });
        });
    }
    return out;
}

} // namespace strata
