#include "strata/diagram.hpp"

#include <algorithm>
#include <numeric>

namespace strata {

namespace {

int mod(int x, int m) { return ((x % m) + m) % m; }

long long llgcd(long long a, long long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// Minimal exact rational for the small elimination below.
struct Rat {
    long long n = 0, d = 1;
    Rat() = default;
    Rat(long long v) : n(v), d(1) {}
    Rat(long long nn, long long dd) : n(nn), d(dd) { reduce(); }
    void reduce() {
        if (d < 0) { n = -n; d = -d; }
        long long g = llgcd(n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n == 0) d = 1;
    }
    bool zero() const { return n == 0; }
    Rat operator*(const Rat& o) const { return Rat(n * o.n, d * o.d); }
    Rat operator/(const Rat& o) const { return Rat(n * o.d, d * o.n); }
    Rat operator-(const Rat& o) const { return Rat(n * o.d - o.n * d, d * o.d); }
};

} // namespace

int Dia::add_edge(int v0, int s0, int v1, int s1, int cls) {
    DiaEdge e;
    e.vert = {v0, v1};
    e.slot = {mod(s0, verts[static_cast<size_t>(v0)].slots()),
              mod(s1, verts[static_cast<size_t>(v1)].slots())};
    e.cls = cls;
    edges.push_back(e);
    return static_cast<int>(edges.size()) - 1;
}

void Dia::move_end(int h, int v, int slot) {
    auto& e = edges[static_cast<size_t>(end_edge(h))];
    e.vert[static_cast<size_t>(end_side(h))] = v;
    e.slot[static_cast<size_t>(end_side(h))] = mod(slot, verts[static_cast<size_t>(v)].slots());
}

std::vector<std::pair<int, int>> star(const Dia& dia, int v) {
    std::vector<std::pair<int, int>> out;
    for (int h = 0; h < dia.num_ends(); ++h)
        if (dia.vertex_of(h) == v) out.emplace_back(dia.slot_of(h), h);
    std::sort(out.begin(), out.end());
    return out;
}

int next_end_after(const Dia& dia, int v, int slot) {
    auto st = star(dia, v);
    if (st.empty()) throw ValidationError("next_end_after on an isolated vertex");
    for (const auto& [s, h] : st)
        if (s > slot) return h;
    return st.front().second; // wrap around
}

int prev_end_before(const Dia& dia, int v, int slot) {
    auto st = star(dia, v);
    if (st.empty()) throw ValidationError("prev_end_before on an isolated vertex");
    for (auto it = st.rbegin(); it != st.rend(); ++it)
        if (it->first < slot) return it->second;
    return st.back().second; // wrap around
}

std::vector<std::vector<int>> faces(const Dia& dia) {
    std::vector<std::vector<int>> out;
    std::vector<char> used(static_cast<size_t>(dia.num_ends()), 0);
    for (int h0 = 0; h0 < dia.num_ends(); ++h0) {
        if (used[static_cast<size_t>(h0)]) continue;
        std::vector<int> face;
        int h = h0;
        do {
            face.push_back(h);
            used[static_cast<size_t>(h)] = 1;
            int t = end_twin(h);
            h = next_end_after(dia, dia.vertex_of(t), dia.slot_of(t));
        } while (h != h0);
        out.push_back(std::move(face));
    }
    return out;
}

int face_gap_sum(const Dia& dia, const std::vector<int>& face) {
    int sum = 0;
    for (size_t i = 0; i < face.size(); ++i) {
        int t = end_twin(face[i]);
        int nxt = face[(i + 1) % face.size()];
        int v = dia.vertex_of(t);
        if (dia.vertex_of(nxt) != v)
            throw ValidationError("face walk is not consecutive at a vertex");
        int m = dia.verts[static_cast<size_t>(v)].slots();
        int gap = mod(dia.slot_of(nxt) - dia.slot_of(t), m);
        sum += gap == 0 ? m : gap;
    }
    return sum;
}

int face_pole_order(const Dia& dia, const std::vector<int>& face) {
    int sum = face_gap_sum(dia, face);
    int k = static_cast<int>(face.size());
    if ((sum - k) % 2 != 0) throw ValidationError("face gap sum has wrong parity");
    return (sum - k) / 2 + 1;
}

std::vector<std::pair<int, int>> face_circuit(const Dia& dia, int h0) {
    std::vector<std::pair<int, int>> out;
    int h = h0;
    do {
        int v = dia.vertex_of(h);
        int m = dia.verts[static_cast<size_t>(v)].slots();
        int prev = prev_end_before(dia, v, dia.slot_of(h));
        int gap = mod(dia.slot_of(h) - dia.slot_of(prev), m);
        if (gap == 0) gap = m;
        for (int k = 1; k < gap; ++k) out.emplace_back(v, mod(dia.slot_of(h) - k, m));
        h = end_twin(prev);
    } while (h != h0);
    return out;
}

std::vector<std::vector<long long>> period_lattice(const Dia& dia,
                                                   const std::vector<int>& face_block) {
    auto fs = faces(dia);
    if (face_block.size() != fs.size())
        throw ValidationError("face_block size does not match face count");
    int nblocks = fs.empty() ? 0 : *std::max_element(face_block.begin(), face_block.end()) + 1;
    const int ne = static_cast<int>(dia.edges.size());

    // One relation per residue block: the oriented boundary periods of its
    // faces sum to zero.  Walking a face traverses each of its ends' edges
    // from that end to the twin; the edge is measured east-ward from its
    // even-slot end, so the traversal sign is + from the even side.
    std::vector<std::vector<Rat>> rows(static_cast<size_t>(nblocks),
                                       std::vector<Rat>(static_cast<size_t>(ne)));
    for (size_t f = 0; f < fs.size(); ++f)
        for (int h : fs[f]) {
            int sgn = dia.slot_of(h) % 2 == 0 ? 1 : -1;
            auto& cell = rows[static_cast<size_t>(face_block[f])][static_cast<size_t>(end_edge(h))];
            cell = cell - Rat(-sgn);
        }

    // Gauss-Jordan elimination to reduced row echelon form.
    std::vector<int> pivot_col;
    size_t r = 0;
    for (int c = 0; c < ne && r < rows.size(); ++c) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel][static_cast<size_t>(c)].zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        Rat inv = rows[r][static_cast<size_t>(c)];
        for (auto& x : rows[r]) x = x / inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][static_cast<size_t>(c)].zero()) continue;
            Rat fac = rows[i][static_cast<size_t>(c)];
            for (int j = 0; j < ne; ++j)
                rows[i][static_cast<size_t>(j)] =
                    rows[i][static_cast<size_t>(j)] - fac * rows[r][static_cast<size_t>(j)];
        }
        pivot_col.push_back(c);
        ++r;
    }

    // Nullspace basis: one vector per free column, scaled to integers.
    std::vector<char> is_pivot(static_cast<size_t>(ne), 0);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = 1;
    std::vector<std::vector<long long>> result(static_cast<size_t>(ne));
    for (int c = 0; c < ne; ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        std::vector<Rat> vec(static_cast<size_t>(ne));
        vec[static_cast<size_t>(c)] = Rat(1);
        for (size_t i = 0; i < pivot_col.size(); ++i)
            vec[static_cast<size_t>(pivot_col[i])] = Rat(0) - rows[i][static_cast<size_t>(c)];
        long long lcm = 1;
        for (const auto& x : vec) lcm = lcm / llgcd(lcm, x.d) * x.d;
        for (int e = 0; e < ne; ++e)
            result[static_cast<size_t>(e)].push_back(vec[static_cast<size_t>(e)].n *
                                                     (lcm / vec[static_cast<size_t>(e)].d));
    }
    return result;
}

std::array<std::vector<long long>, 2> degeneration_rays(const Dia& dia,
                                                        const std::vector<int>& face_block) {
    auto w = period_lattice(dia, face_block);
    const int ne = static_cast<int>(dia.edges.size());
    if (ne == 0 || w[0].size() != 2)
        throw DegenerateDiagramError("period lattice is not 2-dimensional");
    for (const auto& we : w)
        if (we[0] == 0 && we[1] == 0)
            throw DegenerateDiagramError("edge with identically zero period");

    // The positivity cone in the 2-dimensional parameter plane is cut out by
    // the half-planes c . w_e >= 0; its extreme rays are orthogonal to some
    // w_e.  Collect candidates and keep those inside every half-plane.
    std::vector<std::array<long long, 2>> rays;
    for (const auto& we : w)
        for (int s : {1, -1}) {
            std::array<long long, 2> d{-s * we[1], s * we[0]};
            bool ok = true;
            bool strict = false;
            for (const auto& wf : w) {
                long long dot = d[0] * wf[0] + d[1] * wf[1];
                if (dot < 0) { ok = false; break; }
                if (dot > 0) strict = true;
            }
            if (!ok || !strict) continue;
            long long g = llgcd(d[0], d[1]);
            d = {d[0] / g, d[1] / g};
            if (std::find(rays.begin(), rays.end(), d) == rays.end()) rays.push_back(d);
        }
    if (rays.size() != 2)
        throw DegenerateDiagramError("positivity cone does not have two extreme rays");

    std::array<std::vector<long long>, 2> out;
    for (int k = 0; k < 2; ++k) {
        out[static_cast<size_t>(k)].resize(static_cast<size_t>(ne));
        long long g = 0;
        for (int e = 0; e < ne; ++e) {
            long long p = rays[static_cast<size_t>(k)][0] * w[static_cast<size_t>(e)][0] +
                          rays[static_cast<size_t>(k)][1] * w[static_cast<size_t>(e)][1];
            out[static_cast<size_t>(k)][static_cast<size_t>(e)] = p;
            g = llgcd(g, p);
        }
        if (g > 1)
            for (auto& p : out[static_cast<size_t>(k)]) p /= g;
    }
    return out;
}

void validate(const Dia& dia) {
    std::vector<std::vector<int>> slots_at(dia.verts.size());
    for (int h = 0; h < dia.num_ends(); ++h) {
        int v = dia.vertex_of(h);
        if (v < 0 || v >= static_cast<int>(dia.verts.size()))
            throw ValidationError("end attached to missing vertex");
        int s = dia.slot_of(h);
        if (s < 0 || s >= dia.verts[static_cast<size_t>(v)].slots())
            throw ValidationError("end slot out of range");
        slots_at[static_cast<size_t>(v)].push_back(s);
    }
    for (auto& sl : slots_at) {
        std::sort(sl.begin(), sl.end());
        if (std::adjacent_find(sl.begin(), sl.end()) != sl.end())
            throw ValidationError("two ends share a slot");
    }
    for (const auto& e : dia.edges)
        if (e.slot[0] % 2 == e.slot[1] % 2)
            throw ValidationError("edge ends have equal slot parity");
}

std::vector<int> layout_z1(Dia& dia, int vA, int vB, const std::vector<int>& C,
                           const std::vector<int>& D, int cls) {
    if (C.empty() || C.size() != D.size())
        throw ValidationError("layout_z1 needs matching nonempty angle tuples");
    std::vector<int> edges;
    int cs = 0, ds = 0;
    for (size_t i = 0; i < C.size(); ++i) {
        cs += C[i];
        ds += D[i];
        edges.push_back(dia.add_edge(vA, 2 * cs, vB, -1 - 2 * ds, cls));
    }
    return edges;
}

std::vector<int> layout_z2(Dia& dia, int zv, const std::vector<int>& C,
                           const std::vector<int>& D, int eL, int cls) {
    if (C.size() != D.size()) throw ValidationError("layout_z2 needs matching angle tuples");
    std::vector<int> edges;
    int cs = 0, ds = 0;
    edges.push_back(dia.add_edge(zv, 0, zv, 1 - 2 * eL, cls));
    for (size_t i = 0; i < C.size(); ++i) {
        cs += C[i];
        ds += D[i];
        edges.push_back(dia.add_edge(zv, 2 * cs, zv, 1 - 2 * (eL + ds), cls));
    }
    return edges;
}

} // namespace strata
