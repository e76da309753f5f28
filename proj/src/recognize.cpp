// recognize.cpp : reading canonical boundary data off a degenerating arc
// surface.
//
// Given an arc surface and one of its two degeneration rays, the edges with
// zero period ("shrinking") become the bottom level of the boundary point at
// that end of the arc; the surviving edges become the top level.  The
// recognition pipeline:
//
//   1. Cluster the vertices along shrinking edges.  Each cluster carries one
//      bottom-level building block; vertices without shrinking edges are the
//      marked top-level zeros.
//   2. Within a cluster, the shrinking edges form a sub-diagram whose faces
//      are the bottom pole faces.  A face whose interior direction slots host
//      surviving ends is a node pole face: those ends are the prongs of the
//      top level threaded through the node.  The face's pole order is
//      kappa + 1.
//   3. The level split of the marked poles (a pole is on the top level iff
//      its face contains a surviving end) determines the boundary type; the
//      per-type reader then walks the bottom block from its canonical
//      starting cap and the top block along its pole faces, recovering
//      arrangements and cylinder angles.  Angles on the bottom are slot
//      differences; angles at a node zero are differences of circuit indices
//      around the node pole face.
//   4. The arc label is recovered by inverting the threading: anchoring the
//      node pole face circuit at the same end materialize() uses and
//      reconstructing the canonical layout slot s of every prong, each prong
//      at circuit index q satisfies L = dir_top * (s - s0 + q - A_idx); the
//      value must agree over all prongs of the node, which is asserted.
//
// Any structural mismatch throws InconsistencyError: recognition only ever
// runs on outputs of plumb(), so a mismatch is an engine bug, not bad input.
#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "strata/boundary.hpp"

namespace strata {

namespace {

int imod(int a, int m) { return ((a % m) + m) % m; }

void chk(bool cond, const char* msg) {
    if (!cond) throw InconsistencyError(msg);
}

struct View {
    Family fam{};
    BView bv;
    CView cv;
    DView dv;
    AView av;
    std::vector<int> rlabels, rorders;
};

View make_view(const Signature& sig) {
    View v;
    v.fam = classify_one_dim(sig);
    switch (v.fam) {
    case Family::A: v.av = a_view(sig); v.rlabels = v.av.labels; v.rorders = v.av.b; break;
    case Family::B: v.bv = b_view(sig); v.rlabels = v.bv.labels; v.rorders = v.bv.b; break;
    case Family::C: v.cv = c_view(sig); v.rlabels = v.cv.labels; v.rorders = v.cv.b; break;
    case Family::D: v.dv = d_view(sig); v.rlabels = v.dv.labels; v.rorders = v.dv.b; break;
    default: throw UnsupportedFamilyError("recognition requires a one-dimensional A/B/C/D stratum");
    }
    return v;
}

int vridx(const View& v, int label) {
    auto it = std::lower_bound(v.rlabels.begin(), v.rlabels.end(), label);
    if (it == v.rlabels.end() || *it != label) return -1;
    return static_cast<int>(it - v.rlabels.begin());
}

int border(const View& v, int label) {
    int i = vridx(v, label);
    chk(i >= 0, "pole is not residueless");
    return v.rorders[static_cast<size_t>(i)];
}

struct Cluster {
    std::vector<int> verts;             // full vertex ids, ascending
    std::vector<int> vmap;              // full vertex -> sub vertex, -1 outside
    Dia sub;                            // the shrinking edges of this cluster
    std::vector<int> sub_edge_full;     // sub edge -> full edge
    std::vector<int> full_edge_sub;     // full edge -> sub edge, -1 outside
    std::vector<std::vector<int>> subfs;
    std::vector<int> subface_of_end;    // sub end -> sub face
    std::vector<int> marked_zeros;      // 1-based zero labels in this cluster
};

struct Node {
    int cluster = -1;
    int subface = -1;
    int kappa = 0;
    std::set<int> tends;                // full surviving ends threaded here
    int A = 0, s0 = 0, dir = 1;         // threading frame (set per type)
    std::map<std::pair<int, int>, int> qpos; // full (vertex, slot) -> circuit index
};

struct R {
    const Signature& sig;
    const ArcSurface& s;
    View vw;
    std::vector<char> isS;              // per full edge: shrinking at this ray
    std::vector<std::vector<int>> fs;   // full faces
    std::vector<int> face_of;           // full end -> face
    std::vector<int> pole_face;         // pole label-1 -> face
    std::vector<int> pole_of_face;      // face -> pole label, or 0
    std::vector<char> pole_top;         // pole label-1 -> on top level
    std::map<std::pair<int, int>, int> occ; // full (vertex, slot) -> end
    std::vector<int> cl_of;             // full vertex -> cluster, -1 for top
    std::vector<Cluster> cls;
    std::vector<Node> nodes;
};

R build(const Signature& sig, const ArcSurface& s, const std::vector<long long>& ray) {
    R r{sig, s, make_view(sig), {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
    int ne = static_cast<int>(s.dia.edges.size());
    chk(static_cast<int>(ray.size()) == ne, "ray length mismatch");
    r.isS.resize(static_cast<size_t>(ne));
    int ns = 0;
    for (int e = 0; e < ne; ++e) {
        r.isS[static_cast<size_t>(e)] = ray[static_cast<size_t>(e)] == 0;
        ns += r.isS[static_cast<size_t>(e)];
    }
    chk(ns > 0 && ns < ne, "ray must shrink a proper nonempty edge class");

    r.fs = faces(s.dia);
    r.face_of.assign(static_cast<size_t>(s.dia.num_ends()), -1);
    for (size_t f = 0; f < r.fs.size(); ++f)
        for (int h : r.fs[f]) r.face_of[static_cast<size_t>(h)] = static_cast<int>(f);

    chk(static_cast<int>(r.fs.size()) == sig.n(), "face count differs from pole count");
    r.pole_face.assign(static_cast<size_t>(sig.n()), -1);
    r.pole_of_face.assign(r.fs.size(), 0);
    for (int j = 1; j <= sig.n(); ++j) {
        int f = r.face_of[static_cast<size_t>(s.pole_end[static_cast<size_t>(j - 1)])];
        chk(r.pole_of_face[static_cast<size_t>(f)] == 0, "two poles share a face");
        r.pole_of_face[static_cast<size_t>(f)] = j;
        r.pole_face[static_cast<size_t>(j - 1)] = f;
    }
    r.pole_top.assign(static_cast<size_t>(sig.n()), 0);
    for (int j = 1; j <= sig.n(); ++j)
        for (int h : r.fs[static_cast<size_t>(r.pole_face[static_cast<size_t>(j - 1)])])
            if (!r.isS[static_cast<size_t>(end_edge(h))]) r.pole_top[static_cast<size_t>(j - 1)] = 1;

    for (int h = 0; h < s.dia.num_ends(); ++h)
        r.occ[{s.dia.vertex_of(h), s.dia.slot_of(h)}] = h;

    // Clusters along shrinking edges.
    int nv = static_cast<int>(s.dia.verts.size());
    std::vector<int> parent(static_cast<size_t>(nv));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    };
    std::vector<char> hasS(static_cast<size_t>(nv), 0);
    for (int e = 0; e < ne; ++e) {
        if (!r.isS[static_cast<size_t>(e)]) continue;
        const auto& ed = s.dia.edges[static_cast<size_t>(e)];
        hasS[static_cast<size_t>(ed.vert[0])] = hasS[static_cast<size_t>(ed.vert[1])] = 1;
        parent[static_cast<size_t>(find(ed.vert[0]))] = find(ed.vert[1]);
    }
    r.cl_of.assign(static_cast<size_t>(nv), -1);
    std::map<int, int> root_to_cluster;
    for (int v = 0; v < nv; ++v) {
        if (!hasS[static_cast<size_t>(v)]) continue;
        int root = find(v);
        auto [it, fresh] = root_to_cluster.try_emplace(root, static_cast<int>(r.cls.size()));
        if (fresh) r.cls.emplace_back();
        r.cl_of[static_cast<size_t>(v)] = it->second;
        r.cls[static_cast<size_t>(it->second)].verts.push_back(v);
    }
    for (auto& cl : r.cls) {
        cl.vmap.assign(static_cast<size_t>(nv), -1);
        for (int v : cl.verts) {
            cl.vmap[static_cast<size_t>(v)] = cl.sub.add_vertex(
                s.dia.verts[static_cast<size_t>(v)].order, s.dia.verts[static_cast<size_t>(v)].zero);
            int z = s.dia.verts[static_cast<size_t>(v)].zero;
            if (z > 0) cl.marked_zeros.push_back(z);
        }
        std::sort(cl.marked_zeros.begin(), cl.marked_zeros.end());
        cl.full_edge_sub.assign(static_cast<size_t>(ne), -1);
        for (int e = 0; e < ne; ++e) {
            if (!r.isS[static_cast<size_t>(e)]) continue;
            const auto& ed = s.dia.edges[static_cast<size_t>(e)];
            int s0v = cl.vmap[static_cast<size_t>(ed.vert[0])];
            int s1v = cl.vmap[static_cast<size_t>(ed.vert[1])];
            if (s0v < 0 && s1v < 0) continue;
            chk(s0v >= 0 && s1v >= 0, "shrinking edge leaves its cluster");
            DiaEdge se;
            se.vert = {s0v, s1v};
            se.slot = ed.slot;
            se.cls = 0;
            cl.sub.edges.push_back(se);
            cl.full_edge_sub[static_cast<size_t>(e)] = static_cast<int>(cl.sub.edges.size()) - 1;
            cl.sub_edge_full.push_back(e);
        }
        validate(cl.sub);
        cl.subfs = faces(cl.sub);
        cl.subface_of_end.assign(static_cast<size_t>(cl.sub.num_ends()), -1);
        for (size_t f = 0; f < cl.subfs.size(); ++f)
            for (int h : cl.subfs[f]) cl.subface_of_end[static_cast<size_t>(h)] = static_cast<int>(f);
    }

    // Node faces: sub-faces whose interior direction slots host surviving ends.
    int tend_total = 0;
    for (int h = 0; h < s.dia.num_ends(); ++h)
        if (!r.isS[static_cast<size_t>(end_edge(h))] && r.cl_of[static_cast<size_t>(s.dia.vertex_of(h))] >= 0)
            ++tend_total;
    int tend_claimed = 0;
    for (size_t ci = 0; ci < r.cls.size(); ++ci) {
        auto& cl = r.cls[ci];
        for (size_t f = 0; f < cl.subfs.size(); ++f) {
            auto circ = face_circuit(cl.sub, cl.subfs[f][0]);
            std::set<int> tends;
            for (auto [sv, slot] : circ) {
                auto it = r.occ.find({cl.verts[static_cast<size_t>(sv)], slot});
                if (it == r.occ.end()) continue;
                chk(!r.isS[static_cast<size_t>(end_edge(it->second))],
                    "shrinking end inside a face interior");
                tends.insert(it->second);
            }
            if (tends.empty()) continue;
            Node nd;
            nd.cluster = static_cast<int>(ci);
            nd.subface = static_cast<int>(f);
            nd.kappa = face_pole_order(cl.sub, cl.subfs[f]) - 1;
            chk(static_cast<int>(circ.size()) == 2 * nd.kappa, "node face circuit length mismatch");
            tend_claimed += static_cast<int>(tends.size());
            nd.tends = std::move(tends);
            r.nodes.push_back(std::move(nd));
        }
    }
    chk(tend_claimed == tend_total, "surviving prongs outside node pole faces");
    chk(!r.nodes.empty(), "no node between the levels");
    return r;
}

int to_full_end(const Cluster& cl, int sub_end) {
    return make_end(cl.sub_edge_full[static_cast<size_t>(end_edge(sub_end))], end_side(sub_end));
}

int sub_face_of_pole(const R& r, int ci, int label) {
    const auto& cl = r.cls[static_cast<size_t>(ci)];
    int fe = r.s.pole_end[static_cast<size_t>(label - 1)];
    int se = cl.full_edge_sub[static_cast<size_t>(end_edge(fe))];
    chk(se >= 0, "pole face end is not a shrinking edge of this cluster");
    return cl.subface_of_end[static_cast<size_t>(make_end(se, end_side(fe)))];
}

int cluster_of_pole(const R& r, int label) {
    chk(!r.pole_top[static_cast<size_t>(label - 1)], "pole is not on the bottom level");
    int ci = r.cl_of[static_cast<size_t>(r.s.dia.vertex_of(r.s.pole_end[static_cast<size_t>(label - 1)]))];
    chk(ci >= 0, "bottom pole outside every cluster");
    return ci;
}

int node_at(const R& r, int ci, int subface) {
    for (size_t i = 0; i < r.nodes.size(); ++i)
        if (r.nodes[i].cluster == ci && r.nodes[i].subface == subface) return static_cast<int>(i);
    return -1;
}

int node_in(const R& r, int ci) {
    int found = -1;
    for (size_t i = 0; i < r.nodes.size(); ++i)
        if (r.nodes[i].cluster == ci) {
            chk(found < 0, "several nodes where one was expected");
            found = static_cast<int>(i);
        }
    chk(found >= 0, "cluster without a node");
    return found;
}

void anchor_node(R& r, Node& nd, int anchor_sub_end, int A, int s0, int dir) {
    auto& cl = r.cls[static_cast<size_t>(nd.cluster)];
    chk(cl.subface_of_end[static_cast<size_t>(anchor_sub_end)] == nd.subface,
        "anchor end is not on the node pole face");
    auto circ = face_circuit(cl.sub, anchor_sub_end);
    chk(static_cast<int>(circ.size()) == 2 * nd.kappa, "node circuit length mismatch");
    nd.qpos.clear();
    for (size_t q = 0; q < circ.size(); ++q)
        nd.qpos[{cl.verts[static_cast<size_t>(circ[q].first)], circ[q].second}] = static_cast<int>(q);
    nd.A = A;
    nd.s0 = s0;
    nd.dir = dir;
}

int q_of(const R& r, const Node& nd, int full_end) {
    auto it = nd.qpos.find({r.s.dia.vertex_of(full_end), r.s.dia.slot_of(full_end)});
    chk(it != nd.qpos.end(), "prong is not on the node circuit");
    return it->second;
}

// Angle normalizations.  Chain angles are plain halved differences; cycle
// angles use the shifted form so that a full turn reads as the whole angle
// (the single-cylinder case) instead of zero.
int half_diff(int diff, int M) {
    int d = imod(diff, 2 * M);
    chk(d % 2 == 0, "odd slot difference where an angle was expected");
    return d / 2;
}
int norm_cycle(int diff, int M) {
    int d = imod(diff - 2, 2 * M);
    chk(d % 2 == 0, "odd slot difference where an angle was expected");
    return d / 2 + 1;
}

int bottom_pole_label(const R& r, int ci, int subface) {
    const auto& cl = r.cls[static_cast<size_t>(ci)];
    int full = to_full_end(cl, cl.subfs[static_cast<size_t>(subface)][0]);
    int label = r.pole_of_face[static_cast<size_t>(r.face_of[static_cast<size_t>(full)])];
    chk(label > 0 && !r.pole_top[static_cast<size_t>(label - 1)], "bottom face without its pole");
    return label;
}

// ---- bottom block readers ----

struct ChainEntry {
    int label = 0;          // pole label, 0 for a node pole
    int C = 0;              // angle on the reading side
    bool is_node = false;
    int node_idx = -1;
    int enter_sub_end = -1; // the in-end by which the walk entered this face
};

struct BotChain {
    std::vector<ChainEntry> entries;
    int right_subface = -1;
};

BotChain read_bottom_chain(R& r, int ci, int left_subface) {
    auto& cl = r.cls[static_cast<size_t>(ci)];
    chk(cl.subfs[static_cast<size_t>(left_subface)].size() == 1,
        "chain cap face must have a single corner");
    int e = cl.subfs[static_cast<size_t>(left_subface)][0];
    int zv = cl.sub.vertex_of(e);
    int M = cl.sub.verts[static_cast<size_t>(zv)].order + 1;
    int oprev = cl.sub.slot_of(e);
    BotChain out;
    while (true) {
        int t = end_twin(e);
        int f = cl.subface_of_end[static_cast<size_t>(t)];
        if (cl.subfs[static_cast<size_t>(f)].size() == 1) {
            out.right_subface = f;
            break;
        }
        chk(cl.subfs[static_cast<size_t>(f)].size() == 2, "chain face with unexpected corners");
        int other = cl.subfs[static_cast<size_t>(f)][0] == t ? cl.subfs[static_cast<size_t>(f)][1]
                                                             : cl.subfs[static_cast<size_t>(f)][0];
        chk(cl.sub.vertex_of(other) == zv, "bottom chain spans several vertices");
        ChainEntry en;
        en.enter_sub_end = t;
        int ni = node_at(r, ci, f);
        if (ni >= 0) {
            en.is_node = true;
            en.node_idx = ni;
        } else {
            en.label = bottom_pole_label(r, ci, f);
        }
        en.C = half_diff(cl.sub.slot_of(other) - oprev, M);
        chk(en.C >= 1, "chain cylinder angle must be positive");
        out.entries.push_back(en);
        oprev = cl.sub.slot_of(other);
        e = other;
    }
    return out;
}

struct BotCycle {
    std::vector<ChainEntry> entries; // the non-node poles, in cyclic order
    int scalarC = 0;                 // node pole angle at vA
    int node_idx = -1;
    int anchor_sub_end = -1;         // the node face end at vB
};

BotCycle read_bottom_cycle(R& r, int ci, int vA_full) {
    auto& cl = r.cls[static_cast<size_t>(ci)];
    BotCycle out;
    out.node_idx = node_in(r, ci);
    auto& nd = r.nodes[static_cast<size_t>(out.node_idx)];
    const auto& nf = cl.subfs[static_cast<size_t>(nd.subface)];
    chk(nf.size() == 2, "node face of a cycle bottom must have two corners");
    int vAsub = cl.vmap[static_cast<size_t>(vA_full)];
    chk(vAsub >= 0, "cycle vertex outside the cluster");
    int outP, inP;
    if (cl.sub.vertex_of(nf[0]) == vAsub) {
        outP = nf[0];
        inP = nf[1];
    } else {
        outP = nf[1];
        inP = nf[0];
    }
    chk(cl.sub.vertex_of(outP) == vAsub && cl.sub.vertex_of(inP) != vAsub,
        "node face corners not split across the two zeros");
    out.anchor_sub_end = inP;
    int M = cl.sub.verts[static_cast<size_t>(vAsub)].order + 1;
    int o0 = cl.sub.slot_of(outP), oprev = o0;
    int e = outP;
    while (true) {
        int t = end_twin(e);
        int f = cl.subface_of_end[static_cast<size_t>(t)];
        if (f == nd.subface) break;
        chk(cl.subfs[static_cast<size_t>(f)].size() == 2, "cycle face with unexpected corners");
        int other = cl.subfs[static_cast<size_t>(f)][0] == t ? cl.subfs[static_cast<size_t>(f)][1]
                                                             : cl.subfs[static_cast<size_t>(f)][0];
        chk(cl.sub.vertex_of(other) == vAsub, "cycle out-ends not all at vA");
        ChainEntry en;
        en.label = bottom_pole_label(r, ci, f);
        en.C = norm_cycle(cl.sub.slot_of(other) - oprev, M);
        out.entries.push_back(en);
        oprev = cl.sub.slot_of(other);
        e = other;
    }
    out.scalarC = norm_cycle(o0 - oprev, M);
    return out;
}

// ---- top block readers ----

struct TopChain {
    std::vector<ChainEntry> entries;
    std::vector<int> outs, ins; // full ends alpha_0..alpha_p
    int terminal_label = 0;
};

TopChain read_top_chain(R& r, Node& nd, int left_label, const std::set<int>& terminals,
                        const std::set<int>& scalars) {
    int lf = r.pole_face[static_cast<size_t>(left_label - 1)];
    int e = -1;
    for (int h : r.fs[static_cast<size_t>(lf)])
        if (nd.tends.count(h)) {
            chk(e < 0, "several prongs on a cap face");
            e = h;
        }
    chk(e >= 0, "cap face carries no prong at this node");
    TopChain out;
    out.outs.push_back(e);
    int qprev = q_of(r, nd, e);
    while (true) {
        int t = end_twin(e);
        chk(nd.tends.count(t) > 0, "top chain edge leaves the node");
        out.ins.push_back(t);
        int f = r.face_of[static_cast<size_t>(t)];
        int label = r.pole_of_face[static_cast<size_t>(f)];
        chk(label > 0, "top chain face without a pole");
        if (terminals.count(label)) {
            for (int h : r.fs[static_cast<size_t>(f)])
                chk(!nd.tends.count(h) || h == t, "extra prong on a terminal cap face");
            out.terminal_label = label;
            break;
        }
        chk(vridx(r.vw, label) >= 0 || scalars.count(label), "unexpected pole inside a top chain");
        int nxt = -1;
        for (int h : r.fs[static_cast<size_t>(f)])
            if (nd.tends.count(h) && h != t) {
                chk(nxt < 0, "top chain face with too many prongs");
                nxt = h;
            }
        chk(nxt >= 0, "top chain face missing its outgoing prong");
        ChainEntry en;
        en.label = label;
        int q = q_of(r, nd, nxt);
        en.C = half_diff(qprev - q, nd.kappa);
        chk(en.C >= 1, "top chain angle must be positive");
        out.entries.push_back(en);
        out.outs.push_back(nxt);
        qprev = q;
        e = nxt;
    }
    return out;
}

struct TopCycle {
    std::vector<int> outs, ins, labels;
};

TopCycle read_top_cycle(R& r, const std::function<bool(int)>& is_out,
                        const std::function<bool(int)>& is_in, int start_out) {
    TopCycle out;
    int e = start_out;
    do {
        chk(is_out(e), "cycle walk left the out-vertex");
        out.outs.push_back(e);
        int label = r.pole_of_face[static_cast<size_t>(r.face_of[static_cast<size_t>(e)])];
        chk(label > 0, "top cycle face without a pole");
        out.labels.push_back(label);
        int t = end_twin(e);
        chk(is_in(t), "cycle walk left the in-vertex");
        out.ins.push_back(t);
        int f = r.face_of[static_cast<size_t>(t)];
        int nxt = -1;
        for (int h : r.fs[static_cast<size_t>(f)])
            if (is_out(h)) {
                chk(nxt < 0, "top cycle face with too many out-prongs");
                nxt = h;
            }
        chk(nxt >= 0, "top cycle face missing the next prong");
        e = nxt;
    } while (e != start_out);
    return out;
}

void rotate_min_first(TopCycle& c) {
    size_t k = static_cast<size_t>(
        std::min_element(c.labels.begin(), c.labels.end()) - c.labels.begin());
    std::rotate(c.outs.begin(), c.outs.begin() + static_cast<long>(k), c.outs.end());
    std::rotate(c.ins.begin(), c.ins.begin() + static_cast<long>(k), c.ins.end());
    std::rotate(c.labels.begin(), c.labels.begin() + static_cast<long>(k), c.labels.end());
}

std::vector<int> cycle_angles_at_node(R& r, Node& nd, const std::vector<int>& outs) {
    int p = static_cast<int>(outs.size());
    std::vector<int> C(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i)
        C[static_cast<size_t>(i)] =
            norm_cycle(q_of(r, nd, outs[static_cast<size_t>((i + p - 1) % p)]) -
                           q_of(r, nd, outs[static_cast<size_t>(i)]),
                       nd.kappa);
    return C;
}

std::vector<int> cycle_angles_at_vertex(R& r, int M, const std::vector<int>& outs) {
    int p = static_cast<int>(outs.size());
    std::vector<int> C(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i)
        C[static_cast<size_t>(i)] =
            norm_cycle(r.s.dia.slot_of(outs[static_cast<size_t>(i)]) -
                           r.s.dia.slot_of(outs[static_cast<size_t>((i + p - 1) % p)]),
                       M);
    return C;
}

// ---- arc label extraction ----

int extract_X(R& r, Node& nd, const std::vector<std::pair<int, int>>& escan) {
    chk(escan.size() == nd.tends.size(), "prong count mismatch at a node");
    int X = -1;
    std::set<int> seen;
    for (auto [e, sc] : escan) {
        chk(nd.tends.count(e) > 0, "scanned end is not a prong of this node");
        chk(seen.insert(e).second, "prong scanned twice");
        int K = 2 * nd.kappa;
        int x = imod(nd.dir * (imod(sc, K) - nd.s0 + q_of(r, nd, e) - nd.A), K);
        if (X < 0)
            X = x;
        else
            chk(X == x, "prongs of one node disagree on the arc label");
    }
    return X;
}

// Canonical layout slots of a top chain's prongs: out alpha_i at 2(C_1+..+C_i),
// in alpha_i at 1 - 2(eL + D_1+..+D_i).
std::vector<std::pair<int, int>> chain_scan(Node& nd, const TopChain& tc, int eL,
                                            const std::vector<int>& orders) {
    int K = 2 * nd.kappa;
    std::vector<std::pair<int, int>> es;
    es.emplace_back(tc.outs[0], 0);
    es.emplace_back(tc.ins[0], imod(1 - 2 * eL, K));
    int cs = 0, ds = 0;
    for (size_t i = 0; i < tc.entries.size(); ++i) {
        cs += tc.entries[i].C;
        ds += orders[i] - tc.entries[i].C;
        es.emplace_back(tc.outs[i + 1], imod(2 * cs, K));
        es.emplace_back(tc.ins[i + 1], imod(1 - 2 * (eL + ds), K));
    }
    return es;
}

// ---- assembly helpers ----

struct CvecAcc {
    std::vector<int> v;
    explicit CvecAcc(const View& vw) : v(vw.rlabels.size(), -1) {}
    void put(const View& vw, int label, int C) {
        int i = vridx(vw, label);
        chk(i >= 0, "angle recorded for a non-residueless pole");
        chk(v[static_cast<size_t>(i)] == -1, "angle recorded twice for one pole");
        v[static_cast<size_t>(i)] = C;
    }
    std::vector<int> done() {
        for (int x : v) chk(x >= 0, "residueless pole without an angle");
        return v;
    }
};

void finalize(R& r, BoundaryPoint& bp) {
    try {
        validate_boundary(r.sig, bp);
    } catch (const ValidationError& err) {
        throw InconsistencyError(std::string("recognized boundary datum is invalid: ") + err.what());
    }
}

// ---- per-type drivers ----

PB rec_BI(R& r) {
    const auto& bv = r.vw.bv;
    chk(r.cls.size() == 1 && r.nodes.size() == 1, "B-I expects one cluster and one node");
    Node& nd = r.nodes[0];
    chk(r.cls[0].marked_zeros == std::vector<int>{1, 2}, "B-I expects both zeros on the bottom");
    auto cy = read_bottom_cycle(r, 0, r.s.zero_vert[0]);
    anchor_node(r, nd, cy.anchor_sub_end, 2 * nd.kappa - 2, 0, 1);
    auto tc = read_top_chain(r, nd, bv.q1, {bv.q2}, {});
    std::vector<int> orders;
    for (const auto& en : tc.entries) orders.push_back(border(r.vw, en.label));
    int X = extract_X(r, nd, chain_scan(nd, tc, bv.e1, orders));

    BoundaryPoint bp;
    bp.type = BType::B_I;
    bp.l1 = bp.l2 = static_cast<int>(tc.entries.size());
    CvecAcc cv(r.vw);
    for (const auto& en : tc.entries) {
        bp.tau.push_back(en.label);
        cv.put(r.vw, en.label, en.C);
    }
    for (const auto& en : cy.entries) {
        bp.tau.push_back(en.label);
        cv.put(r.vw, en.label, en.C);
    }
    bp.Cvec = cv.done();
    bp.C = cy.scalarC;
    bp.kappa = {nd.kappa};
    finalize(r, bp);
    return {bp, {X}};
}

PB rec_BIIIa(R& r) {
    const auto& bv = r.vw.bv;
    chk(r.cls.size() == 2 && r.nodes.size() == 2, "B-IIIa expects two clusters with one node each");
    int c1 = cluster_of_pole(r, bv.q1);
    int c2 = cluster_of_pole(r, bv.q2);
    chk(c1 != c2, "B-IIIa pair poles must sit on different components");
    Node& nd1 = r.nodes[static_cast<size_t>(node_in(r, c1))];
    Node& nd2 = r.nodes[static_cast<size_t>(node_in(r, c2))];
    chk(r.cls[static_cast<size_t>(c1)].marked_zeros.size() == 1 &&
            r.cls[static_cast<size_t>(c2)].marked_zeros.size() == 1,
        "B-IIIa expects one zero per bottom component");
    int h1 = r.cls[static_cast<size_t>(c1)].marked_zeros[0];
    int h2 = r.cls[static_cast<size_t>(c2)].marked_zeros[0];
    chk(h1 != h2, "both zeros on one component");

    auto ch1 = read_bottom_chain(r, c1, sub_face_of_pole(r, c1, bv.q1));
    chk(ch1.right_subface == nd1.subface, "first bottom chain does not end at its node");
    auto ch2 = read_bottom_chain(r, c2, nd2.subface);
    chk(ch2.right_subface == sub_face_of_pole(r, c2, bv.q2),
        "second bottom chain does not end at the pair pole");
    for (const auto& en : ch1.entries) chk(!en.is_node, "node inside a B-IIIa bottom chain");
    for (const auto& en : ch2.entries) chk(!en.is_node, "node inside a B-IIIa bottom chain");

    anchor_node(r, nd1, r.cls[static_cast<size_t>(c1)].subfs[static_cast<size_t>(nd1.subface)][0],
                0, 0, 1);
    anchor_node(r, nd2, r.cls[static_cast<size_t>(c2)].subfs[static_cast<size_t>(nd2.subface)][0],
                0, -1, -1);

    auto cyc = read_top_cycle(
        r, [&](int h) { return nd1.tends.count(h) > 0; },
        [&](int h) { return nd2.tends.count(h) > 0; }, *nd1.tends.begin());
    rotate_min_first(cyc);
    auto Cmid = cycle_angles_at_node(r, nd1, cyc.outs);

    int K1 = 2 * nd1.kappa, K2 = 2 * nd2.kappa;
    std::vector<std::pair<int, int>> es1, es2;
    int cs = 0, ds = 0;
    for (size_t i = 0; i < cyc.outs.size(); ++i) {
        cs += Cmid[i];
        ds += border(r.vw, cyc.labels[i]) - Cmid[i];
        es1.emplace_back(cyc.outs[i], imod(2 * cs, K1));
        es2.emplace_back(cyc.ins[i], imod(-1 - 2 * ds, K2));
    }
    int X1 = extract_X(r, nd1, es1);
    int X2 = extract_X(r, nd2, es2);
    int eps = X1 & 1;
    chk((X2 & 1) == eps, "node labels disagree on parity");

    BoundaryPoint bp;
    bp.type = BType::B_IIIa;
    bp.h = {h1, h2};
    bp.l1 = static_cast<int>(ch1.entries.size());
    bp.l2 = bp.l1 + static_cast<int>(cyc.labels.size());
    CvecAcc cv(r.vw);
    for (const auto& en : ch1.entries) {
        bp.tau.push_back(en.label);
        cv.put(r.vw, en.label, en.C);
    }
    for (size_t i = 0; i < cyc.labels.size(); ++i) {
        bp.tau.push_back(cyc.labels[i]);
        cv.put(r.vw, cyc.labels[i], Cmid[i]);
    }
    for (const auto& en : ch2.entries) {
        bp.tau.push_back(en.label);
        cv.put(r.vw, en.label, en.C);
    }
    bp.Cvec = cv.done();
    bp.kappa = {nd1.kappa, nd2.kappa};
    int u = imod((X1 - eps) / 2, nd1.kappa);
    int v = imod((X2 + eps) / 2, nd2.kappa);
    bp.pr = canonical_prong_class(u, v, nd1.kappa, nd2.kappa);
    finalize(r, bp);
    return {bp, {X1, X2}};
}

PB rec_BIIIb(R& r) {
    const auto& bv = r.vw.bv;
    chk(r.cls.size() == 1 && r.nodes.size() == 1, "B-IIIb expects one cluster and one node");
    Node& nd = r.nodes[0];
    bool q1top = r.pole_top[static_cast<size_t>(bv.q1 - 1)];
    int qt = q1top ? 1 : 2;
    int qtl = q1top ? bv.q1 : bv.q2;
    int qbl = q1top ? bv.q2 : bv.q1;
    chk(r.cls[0].marked_zeros.size() == 1, "B-IIIb expects one zero on the bottom");
    int zb = r.cls[0].marked_zeros[0];
    int zt = 3 - zb;

    auto ch = read_bottom_chain(r, 0, sub_face_of_pole(r, 0, qbl));
    chk(ch.right_subface == nd.subface, "bottom chain does not end at the node");
    for (const auto& en : ch.entries) chk(!en.is_node, "node inside a B-IIIb bottom chain");
    anchor_node(r, nd, r.cls[0].subfs[static_cast<size_t>(nd.subface)][0], 0, 0, 1);

    int e0 = -1;
    for (int h : r.fs[static_cast<size_t>(r.pole_face[static_cast<size_t>(qtl - 1)])])
        if (nd.tends.count(h)) {
            chk(e0 < 0, "several prongs on the top pair pole face");
            e0 = h;
        }
    chk(e0 >= 0, "top pair pole face without a prong");
    int vzt = r.s.zero_vert[static_cast<size_t>(zt - 1)];
    auto cyc = read_top_cycle(
        r, [&](int h) { return nd.tends.count(h) > 0; },
        [&](int h) {
            return !r.isS[static_cast<size_t>(end_edge(h))] && r.s.dia.vertex_of(h) == vzt;
        },
        e0);
    chk(cyc.labels[0] == qtl, "top cycle does not start at the pair pole");
    auto Cc = cycle_angles_at_node(r, nd, cyc.outs);

    int K = 2 * nd.kappa;
    std::vector<std::pair<int, int>> es;
    int cs = 0;
    for (size_t i = 0; i < cyc.outs.size(); ++i) {
        cs += Cc[i];
        es.emplace_back(cyc.outs[i], imod(2 * cs, K));
    }
    int X = extract_X(r, nd, es);

    BoundaryPoint bp;
    bp.type = BType::B_IIIb;
    bp.h = {zt, qt};
    bp.l1 = bp.l2 = static_cast<int>(ch.entries.size());
    bp.C = Cc[0];
    CvecAcc cv(r.vw);
    for (const auto& en : ch.entries) {
        bp.tau.push_back(en.label);
        cv.put(r.vw, en.label, en.C);
    }
    for (size_t i = 1; i < cyc.labels.size(); ++i) {
        bp.tau.push_back(cyc.labels[i]);
        cv.put(r.vw, cyc.labels[i], Cc[i]);
    }
    bp.Cvec = cv.done();
    bp.kappa = {nd.kappa};
    finalize(r, bp);
    return {bp, {X}};
}

PB rec_BIIIc(R& r) {
    const auto& bv = r.vw.bv;
    chk(r.cls.size() == 1 && r.nodes.size() == 1, "B-IIIc expects one cluster and one node");
    Node& nd = r.nodes[0];
    chk(r.cls[0].marked_zeros.size() == 1, "B-IIIc expects one zero on the bottom");
    int zb = r.cls[0].marked_zeros[0];
    int zt = 3 - zb;

    auto ch = read_bottom_chain(r, 0, sub_face_of_pole(r, 0, bv.q1));
    chk(ch.right_subface == sub_face_of_pole(r, 0, bv.q2),
        "bottom chain does not run between the pair poles");
    int nodepos = -1;
    for (size_t i = 0; i < ch.entries.size(); ++i)
        if (ch.entries[i].is_node) {
            chk(nodepos < 0, "several node poles inside the bottom chain");
            nodepos = static_cast<int>(i);
        }
    chk(nodepos >= 0, "no node pole inside the bottom chain");
    anchor_node(r, nd, ch.entries[static_cast<size_t>(nodepos)].enter_sub_end, 0, 0, 1);

    int vzt = r.s.zero_vert[static_cast<size_t>(zt - 1)];
    auto cyc = read_top_cycle(
        r, [&](int h) { return nd.tends.count(h) > 0; },
        [&](int h) {
            return !r.isS[static_cast<size_t>(end_edge(h))] && r.s.dia.vertex_of(h) == vzt;
        },
        *nd.tends.begin());
    rotate_min_first(cyc);
    auto Cmid = cycle_angles_at_node(r, nd, cyc.outs);

    int K = 2 * nd.kappa;
    std::vector<std::pair<int, int>> es;
    int cs = 0;
    for (size_t i = 0; i < cyc.outs.size(); ++i) {
        cs += Cmid[i];
        es.emplace_back(cyc.outs[i], imod(2 * cs, K));
    }
    int X = extract_X(r, nd, es);

    BoundaryPoint bp;
    bp.type = BType::B_IIIc;
    bp.h = {zb, zt};
    bp.l1 = nodepos;
    bp.l2 = bp.l1 + static_cast<int>(cyc.labels.size());
    bp.C = ch.entries[static_cast<size_t>(nodepos)].C;
    CvecAcc cv(r.vw);
    for (int i = 0; i < nodepos; ++i) {
        bp.tau.push_back(ch.entries[static_cast<size_t>(i)].label);
        cv.put(r.vw, ch.entries[static_cast<size_t>(i)].label, ch.entries[static_cast<size_t>(i)].C);
    }
    for (size_t i = 0; i < cyc.labels.size(); ++i) {
        bp.tau.push_back(cyc.labels[i]);
        cv.put(r.vw, cyc.labels[i], Cmid[i]);
    }
    for (size_t i = static_cast<size_t>(nodepos) + 1; i < ch.entries.size(); ++i) {
        bp.tau.push_back(ch.entries[i].label);
        cv.put(r.vw, ch.entries[i].label, ch.entries[i].C);
    }
    bp.Cvec = cv.done();
    bp.kappa = {nd.kappa};
    finalize(r, bp);
    return {bp, {X}};
}

PB rec_CIII(R& r) {
    const auto& cvw = r.vw.cv;
    int h3 = -1;
    std::vector<int> tops;
    for (int i = 1; i <= 3; ++i) {
        if (r.pole_top[static_cast<size_t>(cvw.q[i - 1] - 1)])
            tops.push_back(i);
        else {
            chk(h3 < 0, "C-III expects exactly one triple pole on the bottom");
            h3 = i;
        }
    }
    chk(h3 > 0 && tops.size() == 2, "C-III triple split mismatch");
    int h1 = tops[0], h2 = tops[1];
    chk(r.cls.size() == 1 && r.nodes.size() == 1, "C-III expects one cluster and one node");
    Node& nd = r.nodes[0];

    auto ch = read_bottom_chain(r, 0, nd.subface);
    chk(ch.right_subface == sub_face_of_pole(r, 0, cvw.q[h3 - 1]),
        "bottom chain does not end at the bottom triple pole");
    for (const auto& en : ch.entries) chk(!en.is_node, "node inside the C-III bottom chain");
    anchor_node(r, nd, r.cls[0].subfs[static_cast<size_t>(nd.subface)][0], 1, -2, 1);

    auto tc = read_top_chain(r, nd, cvw.q[h1 - 1], {cvw.q[h2 - 1]}, {});
    std::vector<int> orders;
    for (const auto& en : tc.entries) orders.push_back(border(r.vw, en.label));
    int X = extract_X(r, nd, chain_scan(nd, tc, cvw.e[h1 - 1], orders));

    BoundaryPoint bp;
    bp.type = BType::C_III;
    bp.h = {h1, h2, h3};
    bp.l1 = bp.l2 = static_cast<int>(tc.entries.size());
    CvecAcc cv(r.vw);
    for (const auto& en : tc.entries) {
        bp.tau.push_back(en.label);
        cv.put(r.vw, en.label, en.C);
    }
    for (const auto& en : ch.entries) {
        bp.tau.push_back(en.label);
        cv.put(r.vw, en.label, en.C);
    }
    bp.Cvec = cv.done();
    bp.kappa = {nd.kappa};
    finalize(r, bp);
    return {bp, {X}};
}

PB rec_DIIIa(R& r) {
    const auto& dv = r.vw.dv;
    chk(r.cls.size() == 1 && r.nodes.size() == 2, "D-IIIa expects one cluster with two nodes");
    int n1idx = -1;
    for (size_t i = 0; i < r.nodes.size(); ++i)
        for (int h : r.fs[static_cast<size_t>(r.pole_face[static_cast<size_t>(dv.q[0] - 1)])])
            if (r.nodes[i].tends.count(h)) {
                chk(n1idx < 0 || n1idx == static_cast<int>(i), "q1 cap face prong ambiguity");
                n1idx = static_cast<int>(i);
            }
    chk(n1idx >= 0, "no node under the first pair pole");
    Node& nd1 = r.nodes[static_cast<size_t>(n1idx)];
    Node& nd2 = r.nodes[static_cast<size_t>(1 - n1idx)];

    auto ch = read_bottom_chain(r, 0, nd1.subface);
    chk(ch.right_subface == nd2.subface, "bottom chain does not run between the two nodes");
    for (const auto& en : ch.entries) chk(!en.is_node, "third node inside the bottom chain");

    anchor_node(r, nd1, r.cls[0].subfs[static_cast<size_t>(nd1.subface)][0], 2 * nd1.kappa - 1, 0,
                1);
    auto tc1 = read_top_chain(r, nd1, dv.q[0], {dv.q[2], dv.q[3]}, {});
    int h1 = tc1.terminal_label == dv.q[2] ? 3 : 4;
    int h2 = 7 - h1;

    anchor_node(r, nd2, r.cls[0].subfs[static_cast<size_t>(nd2.subface)][0], 2 * nd2.kappa - 1, 0,
                -1);
    auto tc2 = read_top_chain(r, nd2, dv.q[h2 - 1], {dv.q[1]}, {});
    std::vector<int> orders1, orders2;
    for (const auto& en : tc1.entries) orders1.push_back(border(r.vw, en.label));
    int dsum = 0;
    for (const auto& en : tc2.entries) {
        orders2.push_back(border(r.vw, en.label));
        dsum += border(r.vw, en.label) - en.C;
    }
    nd2.s0 = imod(1 - 2 * (dv.e[h2 - 1] + dsum), 2 * nd2.kappa);

    int X1 = extract_X(r, nd1, chain_scan(nd1, tc1, dv.e[0], orders1));
    int X2 = extract_X(r, nd2, chain_scan(nd2, tc2, dv.e[h2 - 1], orders2));
    int eps = X1 & 1;
    chk((X2 & 1) == eps, "node labels disagree on parity");

    BoundaryPoint bp;
    bp.type = BType::D_IIIa;
    bp.h = {h1, h2};
    bp.l1 = static_cast<int>(tc1.entries.size());
    bp.l2 = bp.l1 + static_cast<int>(tc2.entries.size());
    CvecAcc cv(r.vw);
    for (const auto& en : tc1.entries) {
        bp.tau.push_back(en.label);
        cv.put(r.vw, en.label, en.C);
    }
    for (const auto& en : tc2.entries) {
        bp.tau.push_back(en.label);
        cv.put(r.vw, en.label, en.C);
    }
    for (const auto& en : ch.entries) {
        bp.tau.push_back(en.label);
        cv.put(r.vw, en.label, en.C);
    }
    bp.Cvec = cv.done();
    bp.kappa = {nd1.kappa, nd2.kappa};
    int u = imod((X1 + eps) / 2, nd1.kappa);
    int v = imod((X2 - eps) / 2 + nd2.kappa, nd2.kappa);
    bp.pr = canonical_prong_class(u, v, nd1.kappa, nd2.kappa);
    finalize(r, bp);
    return {bp, {X1, X2}};
}

PB rec_DIIIb(R& r) {
    const auto& dv = r.vw.dv;
    int h2 = -1;
    for (int i = 1; i <= 4; ++i)
        if (!r.pole_top[static_cast<size_t>(dv.q[i - 1] - 1)]) {
            chk(h2 < 0, "D-IIIb expects exactly one pair pole on the bottom");
            h2 = i;
        }
    chk(h2 > 0, "no bottom pair pole");
    int h1 = h2 <= 2 ? 3 - h2 : 7 - h2;
    int h3 = h2 <= 2 ? 3 : 1;
    int h4 = h3 + 1;
    chk(r.cls.size() == 1 && r.nodes.size() == 1, "D-IIIb expects one cluster and one node");
    Node& nd = r.nodes[0];

    auto ch = read_bottom_chain(r, 0, sub_face_of_pole(r, 0, dv.q[h2 - 1]));
    chk(ch.right_subface == nd.subface, "bottom chain does not end at the node");
    for (const auto& en : ch.entries) chk(!en.is_node, "node inside the D-IIIb bottom chain");
    anchor_node(r, nd, r.cls[0].subfs[static_cast<size_t>(nd.subface)][0], 0, 0, 1);

    auto tc = read_top_chain(r, nd, dv.q[h3 - 1], {dv.q[h4 - 1]}, {dv.q[h1 - 1]});
    int split = -1;
    for (size_t i = 0; i < tc.entries.size(); ++i)
        if (tc.entries[i].label == dv.q[h1 - 1]) {
            chk(split < 0, "split pair pole occurs twice in the top chain");
            split = static_cast<int>(i);
        }
    chk(split >= 0, "split pair pole missing from the top chain");
    std::vector<int> orders;
    for (size_t i = 0; i < tc.entries.size(); ++i)
        orders.push_back(static_cast<int>(i) == split ? dv.e[h1 - 1]
                                                      : border(r.vw, tc.entries[i].label));
    int X = extract_X(r, nd, chain_scan(nd, tc, dv.e[h3 - 1], orders));

    BoundaryPoint bp;
    bp.type = BType::D_IIIb;
    bp.h = {h1, h2, h3, h4};
    bp.l1 = split;
    bp.l2 = static_cast<int>(tc.entries.size()) - 1;
    bp.C = tc.entries[static_cast<size_t>(split)].C;
    CvecAcc cv(r.vw);
    for (size_t i = 0; i < tc.entries.size(); ++i) {
        if (static_cast<int>(i) == split) continue;
        bp.tau.push_back(tc.entries[i].label);
        cv.put(r.vw, tc.entries[i].label, tc.entries[i].C);
    }
    for (const auto& en : ch.entries) {
        bp.tau.push_back(en.label);
        cv.put(r.vw, en.label, en.C);
    }
    bp.Cvec = cv.done();
    bp.kappa = {nd.kappa};
    finalize(r, bp);
    return {bp, {X}};
}

PB rec_DIIIc(R& r) {
    const auto& dv = r.vw.dv;
    std::vector<int> bots;
    for (int i = 1; i <= 4; ++i)
        if (!r.pole_top[static_cast<size_t>(dv.q[i - 1] - 1)]) bots.push_back(i);
    chk(bots.size() == 2 && ((bots[0] == 1 && bots[1] == 2) || (bots[0] == 3 && bots[1] == 4)),
        "D-IIIc expects one full residue pair on the bottom");
    int h3 = bots[0], h4 = bots[1];
    int h1 = h3 == 1 ? 3 : 1;
    int h2 = h1 + 1;
    chk(r.cls.size() == 1 && r.nodes.size() == 1, "D-IIIc expects one cluster and one node");
    Node& nd = r.nodes[0];

    auto ch = read_bottom_chain(r, 0, sub_face_of_pole(r, 0, dv.q[h3 - 1]));
    chk(ch.right_subface == sub_face_of_pole(r, 0, dv.q[h4 - 1]),
        "bottom chain does not run between the bottom pair poles");
    int nodepos = -1;
    for (size_t i = 0; i < ch.entries.size(); ++i)
        if (ch.entries[i].is_node) {
            chk(nodepos < 0, "several node poles inside the bottom chain");
            nodepos = static_cast<int>(i);
        }
    chk(nodepos >= 0, "no node pole inside the bottom chain");
    anchor_node(r, nd, ch.entries[static_cast<size_t>(nodepos)].enter_sub_end, 0, 0, 1);

    auto tc = read_top_chain(r, nd, dv.q[h1 - 1], {dv.q[h2 - 1]}, {});
    std::vector<int> orders;
    for (const auto& en : tc.entries) orders.push_back(border(r.vw, en.label));
    int X = extract_X(r, nd, chain_scan(nd, tc, dv.e[h1 - 1], orders));

    BoundaryPoint bp;
    bp.type = BType::D_IIIc;
    bp.h = {h1, h2, h3, h4};
    bp.l1 = static_cast<int>(tc.entries.size());
    bp.l2 = bp.l1 + nodepos;
    bp.C = ch.entries[static_cast<size_t>(nodepos)].C;
    CvecAcc cv(r.vw);
    for (const auto& en : tc.entries) {
        bp.tau.push_back(en.label);
        cv.put(r.vw, en.label, en.C);
    }
    for (int i = 0; i < nodepos; ++i) {
        bp.tau.push_back(ch.entries[static_cast<size_t>(i)].label);
        cv.put(r.vw, ch.entries[static_cast<size_t>(i)].label, ch.entries[static_cast<size_t>(i)].C);
    }
    for (size_t i = static_cast<size_t>(nodepos) + 1; i < ch.entries.size(); ++i) {
        bp.tau.push_back(ch.entries[i].label);
        cv.put(r.vw, ch.entries[i].label, ch.entries[i].C);
    }
    bp.Cvec = cv.done();
    bp.kappa = {nd.kappa};
    finalize(r, bp);
    return {bp, {X}};
}

PB rec_AI(R& r) {
    chk(r.cls.size() == 1 && r.nodes.size() == 1, "A-I expects one cluster and one node");
    Node& nd = r.nodes[0];
    chk(r.cls[0].marked_zeros.size() == 2, "A-I expects two zeros on the bottom");
    int h1 = r.cls[0].marked_zeros[0];
    int h2 = r.cls[0].marked_zeros[1];
    int h3 = 6 - h1 - h2;

    auto cy = read_bottom_cycle(r, 0, r.s.zero_vert[static_cast<size_t>(h1 - 1)]);
    anchor_node(r, nd, cy.anchor_sub_end, 2 * nd.kappa - 2, 0, 1);

    int v3 = r.s.zero_vert[static_cast<size_t>(h3 - 1)];
    int t0 = *nd.tends.begin();
    int out0 = -1;
    for (int h : r.fs[static_cast<size_t>(r.face_of[static_cast<size_t>(t0)])])
        if (!r.isS[static_cast<size_t>(end_edge(h))] && r.s.dia.vertex_of(h) == v3) {
            chk(out0 < 0, "top cycle face with several marked-zero ends");
            out0 = h;
        }
    chk(out0 >= 0, "top cycle face without a marked-zero end");
    auto cyc = read_top_cycle(
        r,
        [&](int h) {
            return !r.isS[static_cast<size_t>(end_edge(h))] && r.s.dia.vertex_of(h) == v3;
        },
        [&](int h) { return nd.tends.count(h) > 0; }, out0);
    rotate_min_first(cyc);
    int Mtop = r.s.dia.verts[static_cast<size_t>(v3)].order + 1;
    auto Ctop = cycle_angles_at_vertex(r, Mtop, cyc.outs);

    int K = 2 * nd.kappa;
    std::vector<std::pair<int, int>> es;
    int ds = 0;
    for (size_t i = 0; i < cyc.ins.size(); ++i) {
        ds += border(r.vw, cyc.labels[i]) - Ctop[i];
        es.emplace_back(cyc.ins[i], imod(-1 - 2 * ds, K));
    }
    int X = extract_X(r, nd, es);

    BoundaryPoint bp;
    bp.type = BType::A_I;
    bp.h = {h1, h2, h3};
    bp.l1 = bp.l2 = static_cast<int>(cyc.labels.size());
    bp.C = cy.scalarC;
    CvecAcc cv(r.vw);
    for (size_t i = 0; i < cyc.labels.size(); ++i) {
        bp.tau.push_back(cyc.labels[i]);
        cv.put(r.vw, cyc.labels[i], Ctop[i]);
    }
    for (const auto& en : cy.entries) {
        bp.tau.push_back(en.label);
        cv.put(r.vw, en.label, en.C);
    }
    bp.Cvec = cv.done();
    bp.kappa = {nd.kappa};
    finalize(r, bp);
    return {bp, {X}};
}

} // namespace

PB recognize(const Signature& sig, const ArcSurface& s, const std::vector<long long>& ray) {
    R r = build(sig, s, ray);
    switch (r.vw.fam) {
    case Family::B: {
        bool t1 = r.pole_top[static_cast<size_t>(r.vw.bv.q1 - 1)];
        bool t2 = r.pole_top[static_cast<size_t>(r.vw.bv.q2 - 1)];
        if (t1 && t2) return rec_BI(r);
        if (!t1 && !t2) {
            if (cluster_of_pole(r, r.vw.bv.q1) == cluster_of_pole(r, r.vw.bv.q2))
                return rec_BIIIc(r);
            return rec_BIIIa(r);
        }
        return rec_BIIIb(r);
    }
    case Family::C:
        return rec_CIII(r);
    case Family::D: {
        int nbot = 0;
        for (int i = 0; i < 4; ++i)
            if (!r.pole_top[static_cast<size_t>(r.vw.dv.q[i] - 1)]) ++nbot;
        if (nbot == 0) return rec_DIIIa(r);
        if (nbot == 1) return rec_DIIIb(r);
        return rec_DIIIc(r);
    }
    case Family::A:
        return rec_AI(r);
    default:
        throw UnsupportedFamilyError("recognition requires a one-dimensional A/B/C/D stratum");
    }
}

} // namespace strata
