#include "peiffer/picture.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace peiffer {

Picture from_sequence(const Presentation& pres, const Sequence& s) {
    Picture p(pres);
    std::vector<DartId> cw;  // boundary ends in the positive direction along the boundary
    for (const auto& t : s) {
        if (t.relator >= pres.relator_count()) throw PreconditionViolated("from_sequence: relator out of range");
        std::vector<DartId> outer, inner;
        for (Letter w : t.conjugator) {
            const DartId d = p.add_edge(0, 0, w.inverse());
            outer.push_back(d);
            inner.push_back(p.dart(d).twin);
        }
        const NodeId v = p.add_node(NodeKind::Vertex, t.relator, t.exponent);
        const Word r = t.exponent > 0 ? pres.relator(t.relator) : inverse(pres.relator(t.relator));
        std::vector<DartId> spokes;
        for (Letter l : r) {
            const DartId d = p.add_edge(v, 0, l);
            p.insert_after(v, kNone, d);
            spokes.push_back(p.dart(d).twin);
        }
        p.node_mut(v).basepoint = p.node(v).rotation.front();
        cw.insert(cw.end(), outer.begin(), outer.end());
        cw.insert(cw.end(), spokes.begin(), spokes.end());
        cw.insert(cw.end(), inner.rbegin(), inner.rend());
    }
    for (auto it = cw.rbegin(); it != cw.rend(); ++it) p.insert_after(0, kNone, *it);
    if (!cw.empty()) p.set_global_basepoint(cw.front());
    return p;
}

namespace {

bool connected(const Picture& p, NodeId a, NodeId b) {
    std::vector<bool> seen(p.node_count(), false);
    std::deque<NodeId> q{a};
    seen[a] = true;
    while (!q.empty()) {
        NodeId n = q.front();
        q.pop_front();
        if (n == b) return true;
        for (DartId d : p.node(n).rotation) {
            NodeId m = p.dart(p.dart(d).twin).node;
            if (!seen[m]) {
                seen[m] = true;
                q.push_back(m);
            }
        }
    }
    return false;
}

// Labelled boundary ends read in the positive direction from the basepoint.
std::vector<DartId> boundary_ends(const Picture& p) {
    std::vector<DartId> out;
    const DartId g = p.global_basepoint();
    if (g == kNone) return out;
    DartId d = g;
    do {
        if (!p.dart(d).is_virtual) out.push_back(d);
        d = p.sigma_inv(d);
    } while (d != g);
    return out;
}

// Joins the consecutive boundary ends di, dj (dj follows di) by an arc in a collar.
void cap(Picture& p, DartId di, DartId dj) {
    // virtual ends sitting between them, counter-clockwise after dj
    std::vector<DartId> gap;
    for (DartId d = p.sigma(dj); d != di; d = p.sigma(d)) gap.push_back(d);
    const DartId before = p.sigma_inv(dj);
    const bool keep_before = before != di && std::find(gap.begin(), gap.end(), before) == gap.end();
    DartId g = p.global_basepoint();
    if (g == di || g == dj || std::find(gap.begin(), gap.end(), g) != gap.end()) g = keep_before ? before : kNone;
    for (DartId x : gap) p.remove_from_rotation(x);

    if (p.dart(di).twin == dj) {
        // the arc closes up into a floating circle around the gap contents
        p.remove_from_rotation(di);
        p.remove_from_rotation(dj);
        const NodeId pin = p.add_node(NodeKind::Pin);
        p.insert_after(pin, kNone, di);
        p.insert_after(pin, kNone, dj);
        for (DartId x : gap) p.insert_after(pin, kNone, x);
        const DartId vb = p.add_edge(0, pin, std::nullopt);
        p.insert_after(0, keep_before ? before : kNone, vb);
        p.insert_after(pin, di, p.dart(vb).twin);
        p.set_global_basepoint(g == kNone ? vb : g);
        return;
    }
    const DartId a = p.dart(di).twin, b = p.dart(dj).twin;
    p.remove_from_rotation(di);
    p.remove_from_rotation(dj);
    p.dart_mut(a).twin = b;
    p.dart_mut(b).twin = a;
    for (DartId x : gap) p.insert_after(p.dart(b).node, p.sigma_inv(b), x);
    if (p.node(0).rotation.empty() || !connected(p, 0, p.dart(a).node)) {
        const DartId vb = p.add_edge(0, p.dart(a).node, std::nullopt);
        p.insert_after(0, keep_before ? before : kNone, vb);
        p.insert_after(p.dart(a).node, p.sigma_inv(a), p.dart(vb).twin);
        if (g == kNone) g = vb;
    }
    p.set_global_basepoint(g);
}

}  // namespace

Picture close_to_sphere(const Picture& src) {
    if (!freely_trivial(boundary_label(src))) throw BoundaryNotTrivial();
    Picture p = src;
    for (;;) {
        auto ends = boundary_ends(p);
        if (ends.empty()) break;
        bool capped = false;
        for (std::size_t i = 0; i + 1 < ends.size(); ++i) {
            if (p.dart(ends[i + 1]).read != p.dart(ends[i]).read.inverse()) continue;
            cap(p, ends[i], ends[i + 1]);
            capped = true;
            break;
        }
        if (!capped) throw BoundaryNotTrivial();
    }
    p.normalize();
    p.compact();
    return p;
}

namespace {

// Peeling state: the picture shrinks as nodes are swallowed into the boundary.
struct Peel {
    Picture pic;
    Word prefix;
    Sequence terms;
    Spray spray;

    explicit Peel(const Picture& p) : pic(p) {}

    bool done() const {
        for (NodeId n = 1; n < pic.node_count(); ++n)
            if (!pic.node(n).rotation.empty()) return false;
        return true;
    }

    void apply(const SprayStep& st) {
        const DartId g = pic.global_basepoint();
        switch (st.kind) {
            case SprayStep::Kind::SlideCW: {
                if (g == kNone) throw PreconditionViolated("spray: nothing to slide across");
                if (!pic.dart(g).is_virtual) prefix.push_back(pic.dart(g).read.inverse());
                pic.set_global_basepoint(pic.sigma_inv(g));
                break;
            }
            case SprayStep::Kind::SlideCCW: {
                if (g == kNone) throw PreconditionViolated("spray: nothing to slide across");
                const DartId m = pic.sigma(g);
                if (!pic.dart(m).is_virtual) prefix.push_back(pic.dart(m).read);
                pic.set_global_basepoint(m);
                break;
            }
            case SprayStep::Kind::Absorb: {
                const NodeId n = st.node;
                if (n == 0 || n >= pic.node_count() || pic.node(n).rotation.empty() || st.corner >= pic.dart_count() ||
                    pic.dart(st.corner).node != n)
                    throw PreconditionViolated("spray: absorb step names no live corner");
                if (g != kNone) {
                    const auto faces = compute_faces(pic);
                    if (faces.of_dart[pic.sigma(st.corner)] != faces.of_dart[pic.sigma(g)])
                        throw PreconditionViolated("spray: corner is not in the basepoint region");
                }
                std::vector<DartId> ring;
                for (DartId d = pic.sigma(st.corner);; d = pic.sigma(d)) {
                    ring.push_back(d);
                    if (d == st.corner) break;
                }
                const Node node = pic.node(n);
                if (node.kind == NodeKind::Vertex) {
                    Word u;
                    for (DartId d : ring) {
                        if (d == node.basepoint) break;
                        if (!pic.dart(d).is_virtual) u.push_back(pic.dart(d).read);
                    }
                    terms.push_back(ConjTerm{free_reduce(concat(prefix, u)), node.relator, node.sign});
                    spray.order.push_back(n);
                    spray.paths.push_back(terms.back().conjugator);
                }
                pic.node_mut(n).rotation.clear();
                DartId after = g;
                for (DartId d : ring) {
                    pic.insert_after(0, after, d);
                    after = d;
                }
                pic.set_global_basepoint(st.corner);
                break;
            }
        }
        spray.steps.push_back(st);
    }

    // Nodes with a corner in the basepoint region, as (node, dart before corner).
    std::vector<std::pair<NodeId, DartId>> candidates() const {
        std::vector<std::pair<NodeId, DartId>> out;
        const DartId g = pic.global_basepoint();
        if (g == kNone) {
            for (NodeId n = 1; n < pic.node_count(); ++n)
                if (!pic.node(n).rotation.empty()) out.emplace_back(n, pic.node(n).rotation.front());
            return out;
        }
        const DartId start = pic.sigma(g);
        DartId e = start;
        do {
            const DartId c = pic.sigma_inv(e);
            if (pic.dart(e).node != 0) out.emplace_back(pic.dart(e).node, c);
            e = pic.phi(e);
        } while (e != start);
        return out;
    }
};

}  // namespace

Spray find_spray(const Picture& p, std::uint64_t seed) {
    Peel peel(p);
    std::mt19937_64 rng(seed);
    const bool ccw = seed != 0 && (rng() & 1);
    std::size_t guard = 0;
    const std::size_t limit = 4 * (p.dart_count() + p.node_count() + 4) * (p.node_count() + 1);
    while (!peel.done()) {
        const DartId g = peel.pic.global_basepoint();
        if (seed == 0) {
            const DartId far = g == kNone ? kNone : peel.pic.dart(g).twin;
            if (far != kNone && peel.pic.dart(far).node != 0)
                peel.apply({SprayStep::Kind::Absorb, peel.pic.dart(far).node, peel.pic.sigma_inv(far)});
            else if (g == kNone) {
                auto c = peel.candidates();
                peel.apply({SprayStep::Kind::Absorb, c.front().first, c.front().second});
            } else
                peel.apply({SprayStep::Kind::SlideCW, kNone, kNone});
        } else {
            auto c = peel.candidates();
            const bool force = ++guard > limit;
            if (!c.empty() && (force || rng() % 3 != 0)) {
                const auto& pick = c[rng() % c.size()];
                peel.apply({SprayStep::Kind::Absorb, pick.first, pick.second});
            } else {
                peel.apply({ccw ? SprayStep::Kind::SlideCCW : SprayStep::Kind::SlideCW, kNone, kNone});
            }
        }
    }
    return peel.spray;
}

Sequence sequence_from_spray(const Picture& p, const Spray& s) {
    Peel peel(p);
    for (const auto& st : s.steps) peel.apply(st);
    if (!peel.done()) throw PreconditionViolated("spray does not reach every node");
    return peel.terms;
}

}  // namespace peiffer
