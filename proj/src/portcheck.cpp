#include "lplanar/portcheck.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

#include "lplanar/io.hpp"

namespace lplanar {

PortLabeling labeling_from_code(int m, std::uint64_t code) {
    PortLabeling l;
    for (int e = 0; e < m; ++e) {
        int c = static_cast<int>(code >> (2 * e) & 3);
        l.out.push_back(c & 1 ? Port::Bottom : Port::Top);
        l.in.push_back(c & 2 ? Port::Right : Port::Left);
    }
    return l;
}

std::uint64_t labeling_code(const PortLabeling& l) {
    std::uint64_t c = 0;
    for (std::size_t e = 0; e < l.out.size(); ++e) {
        std::uint64_t b = (l.out[e] == Port::Bottom ? 1 : 0) | (l.in[e] == Port::Right ? 2 : 0);
        c |= b << (2 * e);
    }
    return c;
}

PortLabeling labeling_of(const DirectedGraph& g, const LDrawing& d) {
    PortLabeling l;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        l.out.push_back(exit_port(g, d, e));
        l.in.push_back(entry_port(g, d, e));
    }
    return l;
}

const char* failure_name(PortFailure f) {
    switch (f) {
        case PortFailure::None: return "none";
        case PortFailure::CyclicOrder: return "cyclic-order";
        case PortFailure::AngleSum: return "angle-sum";
        case PortFailure::FaceEquation: return "face-equation";
        case PortFailure::DoubleAssignment: return "double-assignment";
        case PortFailure::MatchingFail: return "matching";
    }
    return "?";
}

Port port_at(const DirectedGraph& g, const PortLabeling& l, EdgeId e, Vertex v) {
    return g.edge(e).tail == v ? l.out[e] : l.in[e];
}

// Up then right, or down then left, peels clockwise at the tail; the head sees the opposite turn.
bool turns_clockwise(const DirectedGraph& g, const PortLabeling& l, EdgeId e, Vertex v) {
    bool at_tail = (l.out[e] == Port::Top) == (l.in[e] == Port::Left);
    return g.edge(e).tail == v ? at_tail : !at_tail;
}

namespace {

int face_cw(const PlaneEmbedding& emb, Vertex v, int i) { return emb.face_of_angle(v, i); }
int face_ccw(const PlaneEmbedding& emb, Vertex v, int i) {
    int d = static_cast<int>(emb.rotation(v).size());
    return emb.face_of_angle(v, (i + d - 1) % d);
}

bool same_direction(const DirectedGraph& g, EdgeId a, EdgeId b, Vertex v) {
    return (g.edge(a).tail == v) == (g.edge(b).tail == v);
}

struct Checker {
    const DirectedGraph& g;
    const PlaneEmbedding& emb;
    const PortLabeling& l;
    PortCheckResult res;

    int n() const { return g.num_vertices(); }
    int deg(Vertex v) const { return static_cast<int>(emb.rotation(v).size()); }
    int port(Vertex v, int i) const { return static_cast<int>(port_at(g, l, emb.rotation(v)[i], v)); }
    bool cw(Vertex v, int i) const { return turns_clockwise(g, l, emb.rotation(v)[i], v); }

    bool fail(PortFailure f, Vertex v, int face, EdgeId e, std::string msg) {
        res.feasible = false;
        res.reason = f;
        res.vertex = v;
        res.face = face;
        res.edge = e;
        res.message = std::string(failure_name(f)) + ": " + msg;
        return false;
    }

    // Port blocks read clockwise from position `start` must be counterclockwise peelers first.
    bool fan_ok(Vertex v, int start) const {
        const int d = deg(v);
        for (int k = 0; k + 1 < d; ++k) {
            int i = (start + k) % d, j = (start + k + 1) % d;
            if (port(v, i) == port(v, j) && cw(v, i) && !cw(v, j)) return false;
        }
        return true;
    }

    // Stage (a): quarter-turn angles. Vertices whose edges all share one port get the list of
    // positions where the full turn may sit.
    std::vector<std::vector<int>> free_pos{};
    bool stage_a() {
        auto& ang = res.witness.angle;
        ang.assign(n(), {});
        free_pos.assign(n(), {});
        for (Vertex v = 0; v < n(); ++v) {
            const int d = deg(v);
            ang[v].assign(d, 0);
            if (d == 0) continue;
            if (d == 1) {
                ang[v][0] = 4;
                continue;
            }
            int sum = 0, changes = 0, distinct = 0;
            bool seen[4] = {false, false, false, false};
            for (int i = 0; i < d; ++i) {
                int a = (port(v, (i + 1) % d) - port(v, i) + 4) % 4;
                ang[v][i] = a;
                sum += a;
                if (a) ++changes;
                if (!seen[port(v, i)]) ++distinct;
                seen[port(v, i)] = true;
            }
            if (sum == 0) {
                for (int i = 0; i < d; ++i)
                    if (fan_ok(v, (i + 1) % d)) free_pos[v].push_back(i);
                if (free_pos[v].empty())
                    return fail(PortFailure::CyclicOrder, v, kNone, kNone,
                                "edges at vertex " + std::to_string(v) + " cannot fan out of one port");
                continue;
            }
            if (changes != distinct)
                return fail(PortFailure::CyclicOrder, v, kNone, kNone,
                            "port blocks interleave at vertex " + std::to_string(v));
            if (sum != 4)
                return fail(PortFailure::AngleSum, v, kNone, kNone,
                            "port blocks out of clockwise order at vertex " + std::to_string(v));
            int start = 0;
            for (int i = 0; i < d; ++i)
                if (ang[v][(i + d - 1) % d] != 0) start = i;
            if (!fan_ok(v, start))
                return fail(PortFailure::CyclicOrder, v, kNone, kNone,
                            "bend directions inside a port cross at vertex " + std::to_string(v));
        }
        return true;
    }

    // Condition 3' pieces per face.
    std::vector<int> convex{}, deg_f{}, mixed_f{}, xsum_f{};
    void face_tallies() {
        const int F = emb.num_faces();
        convex.assign(F, 0);
        deg_f.assign(F, 0);
        mixed_f.assign(F, 0);
        xsum_f.assign(F, 0);
        res.witness.convex_face.assign(g.num_edges(), kNone);
        res.witness.x_vf.assign(n(), {});
        for (int f = 0; f < F; ++f) deg_f[f] = static_cast<int>(emb.face(f).size());
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            Vertex v = g.edge(e).tail;
            int i = emb.position(v, e);
            int f = turns_clockwise(g, l, e, v) ? face_cw(emb, v, i) : face_ccw(emb, v, i);
            res.witness.convex_face[e] = f;
            ++convex[f];
        }
        for (Vertex v = 0; v < n(); ++v) {
            const int d = deg(v);
            const auto& r = emb.rotation(v);
            res.witness.x_vf[v].assign(d, 0);
            for (int i = 0; i < d; ++i) {
                int f = emb.face_of_angle(v, i);
                bool same = same_direction(g, r[i], r[(i + 1) % d], v);
                if (!same) ++mixed_f[f];
            }
        }
    }

    void set_x(Vertex v) {
        const int d = deg(v);
        const auto& r = emb.rotation(v);
        for (int i = 0; i < d; ++i) {
            bool same = same_direction(g, r[i], r[(i + 1) % d], v);
            int a = res.witness.angle[v][i];
            res.witness.x_vf[v][i] = same ? a / 2 : (a - 1) / 2;
        }
    }

    bool face_ok(int f) const {
        // sum convex bends - sum x_vf = +-2 + (mixed - deg)/2, minus sign only outside.
        int target = (f == emb.outer_face() ? -2 : 2) + (mixed_f[f] - deg_f[f]) / 2;
        return convex[f] - xsum_f[f] == target;
    }

    // Stage (d): bend owners. Returns the failure kind, or None.
    PortFailure stage_d(Vertex* where, EdgeId* which) {
        const int m = g.num_edges();
        auto& owner = res.witness.owner;
        owner.assign(m, kNone);
        struct Need {
            Vertex v;
            EdgeId a, b;
        };
        std::vector<Need> needs;
        for (Vertex v = 0; v < n(); ++v) {
            const int d = deg(v);
            if (d < 2) continue;
            const auto& r = emb.rotation(v);
            const auto& ang = res.witness.angle[v];
            int start = 0;
            for (int i = 0; i < d; ++i)
                if (ang[(i + d - 1) % d] != 0) start = i;
            // Walk blocks of zero angles: [ccw peelers][cw peelers].
            for (int k = 0; k < d;) {
                std::vector<int> block = {(start + k) % d};
                while (k + static_cast<int>(block.size()) < d && ang[block.back()] == 0)
                    block.push_back((start + k + static_cast<int>(block.size())) % d);
                k += static_cast<int>(block.size());
                std::vector<EdgeId> ccw, cwv;
                for (int i : block) (cw(v, i) ? cwv : ccw).push_back(r[i]);
                auto claim = [&](EdgeId e) {
                    if (owner[e] != kNone && owner[e] != v) {
                        *where = v;
                        *which = e;
                        return false;
                    }
                    owner[e] = v;
                    return true;
                };
                for (std::size_t j = 0; j + 1 < ccw.size(); ++j)
                    if (!claim(ccw[j])) return PortFailure::DoubleAssignment;
                for (std::size_t j = 1; j < cwv.size(); ++j)
                    if (!claim(cwv[j])) return PortFailure::DoubleAssignment;
                if (!ccw.empty() && !cwv.empty()) needs.push_back({v, ccw.back(), cwv.front()});
            }
        }
        // Ports with two middle edges against free edges; every node has degree at most 2.
        const int P = static_cast<int>(needs.size());
        std::vector<std::vector<int>> by_edge(m);
        std::vector<int> avail(P, 0);
        for (int p = 0; p < P; ++p) {
            for (EdgeId e : {needs[p].a, needs[p].b})
                if (owner[e] == kNone) {
                    by_edge[e].push_back(p);
                    ++avail[p];
                }
        }
        std::vector<bool> done(P, false);
        // A middle edge the vertex already owns settles the port.
        for (int p = 0; p < P; ++p)
            if (owner[needs[p].a] == needs[p].v || owner[needs[p].b] == needs[p].v) done[p] = true;
        std::deque<int> queue;
        auto take = [&](int p, EdgeId e) {
            done[p] = true;
            owner[e] = needs[p].v;
            for (int q : by_edge[e])
                if (!done[q]) {
                    --avail[q];
                    queue.push_back(q);
                }
        };
        auto settle = [&](int p) -> bool {
            if (done[p]) return true;
            for (EdgeId e : {needs[p].a, needs[p].b})
                if (owner[e] == kNone) {
                    take(p, e);
                    return true;
                }
            *where = needs[p].v;
            *which = needs[p].a;
            return false;
        };
        for (int p = 0; p < P; ++p)
            if (!done[p] && avail[p] <= 1) queue.push_back(p);
        for (int p = 0;;) {
            while (!queue.empty()) {
                int q = queue.front();
                queue.pop_front();
                if (!done[q] && !settle(q)) return PortFailure::MatchingFail;
            }
            while (p < P && done[p]) ++p;
            if (p == P) break;
            if (!settle(p)) return PortFailure::MatchingFail;
        }
        return PortFailure::None;
    }

    PortCheckResult run() {
        res.witness = {};
        if (!stage_a()) return res;
        face_tallies();
        std::vector<Vertex> frees;
        for (Vertex v = 0; v < n(); ++v) {
            if (free_pos[v].empty()) set_x(v);
            else frees.push_back(v);
        }
        for (Vertex v = 0; v < n(); ++v)
            if (free_pos[v].empty())
                for (int i = 0; i < deg(v); ++i) xsum_f[emb.face_of_angle(v, i)] += res.witness.x_vf[v][i];
        // Faces that no free vertex touches are settled now.
        std::vector<int> open(emb.num_faces(), 0);
        for (Vertex v : frees)
            for (int i = 0; i < deg(v); ++i) ++open[emb.face_of_angle(v, i)];
        for (int f = 0; f < emb.num_faces(); ++f) {
            if ((mixed_f[f] - deg_f[f]) % 2 != 0)
                throw std::logic_error("face parity: in/out count and degree differ in parity");
            if (open[f] == 0 && !face_ok(f))
            {
                fail(PortFailure::FaceEquation, kNone, f, kNone, "face " + std::to_string(f) + " does not close");
                return res;
            }
        }
        // Place the full turn at each free vertex; usually the faces force it.
        PortFailure best = PortFailure::FaceEquation;
        Vertex bw = kNone;
        EdgeId be = kNone;
        int bf = kNone;
        std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
            if (k == frees.size()) {
                Vertex w = kNone;
                EdgeId e = kNone;
                PortFailure r = stage_d(&w, &e);
                if (r == PortFailure::None) return true;
                if (best == PortFailure::FaceEquation || r == PortFailure::MatchingFail) {
                    best = r;
                    bw = w;
                    be = e;
                }
                return false;
            }
            Vertex v = frees[k];
            const int d = deg(v);
            for (int pos : free_pos[v]) {
                for (int i = 0; i < d; ++i) res.witness.angle[v][i] = i == pos ? 4 : 0;
                set_x(v);
                for (int i = 0; i < d; ++i) xsum_f[emb.face_of_angle(v, i)] += res.witness.x_vf[v][i];
                for (int i = 0; i < d; ++i) --open[emb.face_of_angle(v, i)];
                bool ok = true;
                for (int i = 0; i < d && ok; ++i) {
                    int f = emb.face_of_angle(v, i);
                    if (open[f] == 0 && !face_ok(f)) {
                        ok = false;
                        bf = f;
                    }
                }
                if (ok && rec(k + 1)) return true;
                for (int i = 0; i < d; ++i) ++open[emb.face_of_angle(v, i)];
                for (int i = 0; i < d; ++i) xsum_f[emb.face_of_angle(v, i)] -= res.witness.x_vf[v][i];
            }
            return false;
        };
        if (rec(0)) {
            res.feasible = true;
            res.reason = PortFailure::None;
            res.message = "feasible";
            return res;
        }
        if (best == PortFailure::FaceEquation) {
            fail(best, kNone, bf, kNone, "no placement of full turns closes every face");
            return res;
        }
        fail(best, bw, kNone, be,
                    best == PortFailure::DoubleAssignment
                        ? "bend of edge " + std::to_string(be) + " needed at both ends"
                        : "middle edges at vertex " + std::to_string(bw) + " already taken");
        return res;
    }
};

}  // namespace

PortCheckResult check_port_feasibility(const DirectedGraph& g, const PlaneEmbedding& emb, const PortLabeling& l) {
    if (emb.num_vertices() != g.num_vertices() || emb.num_edges() != g.num_edges())
        throw EmbeddingInvalid("embedding does not match the graph");
    if (static_cast<int>(l.out.size()) != g.num_edges() || static_cast<int>(l.in.size()) != g.num_edges())
        throw GraphError("labeling does not cover all edges");
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if ((l.out[e] != Port::Top && l.out[e] != Port::Bottom) || (l.in[e] != Port::Left && l.in[e] != Port::Right))
            throw GraphError("label of edge " + std::to_string(e) + " uses a port of the wrong kind");
    Checker c{g, emb, l, {}};
    return c.run();
}

bool witness_to_partial_drawing_check(const DirectedGraph& g, const PlaneEmbedding& emb, const PortLabeling& l,
                                      const AngleWitness& w, std::string* why) {
    auto no = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    const int n = g.num_vertices(), m = g.num_edges();
    if (static_cast<int>(w.angle.size()) != n || static_cast<int>(w.owner.size()) != m) return no("witness shape");
    // 1: angles fit the ports and sum to a full turn.
    for (Vertex v = 0; v < n; ++v) {
        const auto& r = emb.rotation(v);
        const int d = static_cast<int>(r.size());
        if (static_cast<int>(w.angle[v].size()) != d) return no("witness shape");
        int sum = 0;
        for (int i = 0; i < d; ++i) {
            int a = w.angle[v][i];
            int p0 = static_cast<int>(port_at(g, l, r[i], v)), p1 = static_cast<int>(port_at(g, l, r[(i + 1) % d], v));
            if (a < 0 || a > 4 || (a - (p1 - p0) + 8) % 4 != 0) return no("angle disagrees with ports");
            sum += a;
        }
        if (d > 0 && sum != 4) return no("angles at vertex " + std::to_string(v) + " do not sum to 2pi");
    }
    // 2: one bend per edge, from a vertical port to a horizontal one.
    for (EdgeId e = 0; e < m; ++e)
        if ((l.out[e] != Port::Top && l.out[e] != Port::Bottom) || (l.in[e] != Port::Left && l.in[e] != Port::Right))
            return no("edge " + std::to_string(e) + " is not a one-bend edge");
    // 3: convex minus concave is 4 inside, -4 outside.
    std::vector<int> turn(emb.num_faces(), 0);
    for (Vertex v = 0; v < n; ++v)
        for (int i = 0; i < static_cast<int>(w.angle[v].size()); ++i) turn[emb.face_of_angle(v, i)] += 2 - w.angle[v][i];
    for (EdgeId e = 0; e < m; ++e) {
        Vertex v = g.edge(e).tail;
        int i = emb.position(v, e);
        bool c = turns_clockwise(g, l, e, v);
        turn[c ? face_cw(emb, v, i) : face_ccw(emb, v, i)] += 1;
        turn[c ? face_ccw(emb, v, i) : face_cw(emb, v, i)] -= 1;
    }
    for (int f = 0; f < emb.num_faces(); ++f)
        if (turn[f] != (f == emb.outer_face() ? -4 : 4)) return no("face " + std::to_string(f) + " turns wrong");
    // 4: bend-or-end at every zero angle between edges of one direction.
    for (Vertex v = 0; v < n; ++v) {
        const auto& r = emb.rotation(v);
        const int d = static_cast<int>(r.size());
        if (d < 2) continue;
        for (int i = 0; i < d; ++i) {
            EdgeId e1 = r[i], e2 = r[(i + 1) % d];
            if (!same_direction(g, e1, e2, v) || w.angle[v][i] != 0) continue;
            bool ok1 = w.owner[e1] == v && !turns_clockwise(g, l, e1, v);
            bool ok2 = w.owner[e2] == v && turns_clockwise(g, l, e2, v);
            if (!ok1 && !ok2) return no("bend-or-end fails at vertex " + std::to_string(v));
        }
    }
    for (EdgeId e = 0; e < m; ++e)
        if (w.owner[e] != kNone && w.owner[e] != g.edge(e).tail && w.owner[e] != g.edge(e).head)
            return no("bend owned by a vertex off its edge");
    return true;
}

bool brute_force_port_feasibility(const DirectedGraph& g, const PlaneEmbedding& emb, const PortLabeling& l,
                                  AngleWitness* found) {
    const int n = g.num_vertices(), m = g.num_edges();
    if (m > 16) throw GraphError("brute force limited to 16 edges");
    AngleWitness w;
    w.angle.assign(n, {});
    w.owner.assign(m, kNone);
    // Angle vectors per vertex: each angle congruent to the port step, summing to a full turn.
    std::vector<std::vector<std::vector<int>>> options(n);
    for (Vertex v = 0; v < n; ++v) {
        const auto& r = emb.rotation(v);
        const int d = static_cast<int>(r.size());
        std::vector<int> cur(d);
        std::function<void(int, int)> gen = [&](int i, int left) {
            if (i == d) {
                if (left == 0) options[v].push_back(cur);
                return;
            }
            int p0 = static_cast<int>(port_at(g, l, r[i], v)), p1 = static_cast<int>(port_at(g, l, r[(i + 1) % d], v));
            for (int a = (p1 - p0 + 4) % 4; a <= left; a += 4) {
                cur[i] = a;
                gen(i + 1, left - a);
            }
        };
        if (d > 0) gen(0, 4);
        else options[v].push_back({});
        if (options[v].empty()) return false;
    }
    // Owners: backtrack edge by edge; a zero-angle pair is checked once both its edges are fixed.
    std::function<bool(EdgeId)> owners = [&](EdgeId e) -> bool {
        if (e == m) return witness_to_partial_drawing_check(g, emb, l, w);
        for (Vertex o : {kNone, g.edge(e).tail, g.edge(e).head}) {
            w.owner[e] = o;
            bool ok = true;
            for (Vertex v : {g.edge(e).tail, g.edge(e).head}) {
                const auto& r = emb.rotation(v);
                const int d = static_cast<int>(r.size());
                for (int i = 0; i < d && ok; ++i) {
                    EdgeId e1 = r[i], e2 = r[(i + 1) % d];
                    if (d < 2 || std::max(e1, e2) != e || !same_direction(g, e1, e2, v) || w.angle[v][i] != 0)
                        continue;
                    bool ok1 = w.owner[e1] == v && !turns_clockwise(g, l, e1, v);
                    bool ok2 = w.owner[e2] == v && turns_clockwise(g, l, e2, v);
                    ok = ok1 || ok2;
                }
            }
            if (ok && owners(e + 1)) return true;
        }
        w.owner[e] = kNone;
        return false;
    };
    std::function<bool(Vertex)> angles = [&](Vertex v) -> bool {
        if (v == n) {
            // Face sums do not depend on owners.
            std::vector<int> turn(emb.num_faces(), 0);
            for (Vertex u = 0; u < n; ++u)
                for (int i = 0; i < static_cast<int>(w.angle[u].size()); ++i)
                    turn[emb.face_of_angle(u, i)] += 2 - w.angle[u][i];
            for (EdgeId e = 0; e < m; ++e) {
                Vertex t = g.edge(e).tail;
                int i = emb.position(t, e);
                bool c = turns_clockwise(g, l, e, t);
                turn[c ? face_cw(emb, t, i) : face_ccw(emb, t, i)] += 1;
                turn[c ? face_ccw(emb, t, i) : face_cw(emb, t, i)] -= 1;
            }
            for (int f = 0; f < emb.num_faces(); ++f)
                if (turn[f] != (f == emb.outer_face() ? -4 : 4)) return false;
            return owners(0);
        }
        for (const auto& opt : options[v]) {
            w.angle[v] = opt;
            if (angles(v + 1)) return true;
        }
        return false;
    };
    if (!angles(0)) return false;
    if (found) {
        w.x_vf.assign(n, {});
        w.convex_face.assign(m, kNone);
        for (Vertex v = 0; v < n; ++v) {
            const auto& r = emb.rotation(v);
            const int d = static_cast<int>(r.size());
            for (int i = 0; i < d; ++i) {
                bool same = same_direction(g, r[i], r[(i + 1) % d], v);
                w.x_vf[v].push_back(same ? w.angle[v][i] / 2 : (w.angle[v][i] - 1) / 2);
            }
        }
        for (EdgeId e = 0; e < m; ++e) {
            Vertex t = g.edge(e).tail;
            int i = emb.position(t, e);
            w.convex_face[e] = turns_clockwise(g, l, e, t) ? face_cw(emb, t, i) : face_ccw(emb, t, i);
        }
        *found = w;
    }
    return true;
}

std::string write_labels(const DirectedGraph& g, const PortLabeling& l) {
    std::ostringstream os;
    auto name = [&](Vertex v) { return g.label(v).empty() ? std::to_string(v) : g.label(v); };
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        os << "e " << name(g.edge(e).tail) << " " << name(g.edge(e).head) << " out=" << port_name(l.out[e])
           << " in=" << port_name(l.in[e]) << "\n";
    return os.str();
}

PortLabeling parse_labels(const DirectedGraph& g, const std::string& text, const std::string& source) {
    const int m = g.num_edges();
    PortLabeling l;
    l.out.assign(m, Port::Top);
    l.in.assign(m, Port::Left);
    std::vector<bool> seen(m, false);
    auto vertex = [&](const std::string& s, int ln) -> Vertex {
        if (auto v = g.vertex_by_label(s)) return *v;
        try {
            std::size_t used = 0;
            int v = std::stoi(s, &used);
            if (used == s.size() && v >= 0 && v < g.num_vertices()) return v;
        } catch (const std::exception&) {
        }
        throw ParseError(source, ln, "unknown vertex '" + s + "'");
    };
    std::istringstream is(text);
    std::string line;
    int ln = 0;
    while (std::getline(is, line)) {
        ++ln;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        auto tok = split_ws(line);
        if (tok.empty()) continue;
        if (tok.size() != 5 || tok[0] != "e" || tok[3].rfind("out=", 0) != 0 || tok[4].rfind("in=", 0) != 0)
            throw ParseError(source, ln, "expected 'e <u> <v> out=<top|bottom> in=<left|right>'");
        Vertex u = vertex(tok[1], ln), v = vertex(tok[2], ln);
        auto e = g.find_edge(u, v);
        if (!e) throw ParseError(source, ln, "no edge " + tok[1] + " -> " + tok[2]);
        if (seen[*e]) throw ParseError(source, ln, "edge labeled twice");
        seen[*e] = true;
        std::string o = tok[3].substr(4), i = tok[4].substr(3);
        if (o == "top") l.out[*e] = Port::Top;
        else if (o == "bottom") l.out[*e] = Port::Bottom;
        else throw ParseError(source, ln, "out must be top or bottom");
        if (i == "left") l.in[*e] = Port::Left;
        else if (i == "right") l.in[*e] = Port::Right;
        else throw ParseError(source, ln, "in must be left or right");
    }
    for (EdgeId e = 0; e < m; ++e)
        if (!seen[e]) throw ParseError(source, ln, "edge " + std::to_string(e) + " has no label");
    return l;
}

}  // namespace lplanar
