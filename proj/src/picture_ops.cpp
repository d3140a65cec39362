#include "peiffer/picture.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace peiffer {

Picture mirror(const Picture& p) {
    Picture m = p;
    for (NodeId n = 0; n < m.node_count(); ++n) {
        Node& node = m.node_mut(n);
        if (node.kind == NodeKind::Vertex && !node.rotation.empty()) {
            // the reading now starts at the previous labelled dart
            DartId d = p.sigma_inv(node.basepoint);
            while (p.dart(d).is_virtual) d = p.sigma_inv(d);
            node.basepoint = d;
            node.sign = -node.sign;
        }
        std::reverse(node.rotation.begin(), node.rotation.end());
    }
    for (DartId d = 0; d < m.dart_count(); ++d)
        if (!m.dart(d).is_virtual) m.dart_mut(d).read = p.dart(d).read.inverse();
    if (p.global_basepoint() != kNone) m.set_global_basepoint(p.sigma(p.global_basepoint()));
    return m;
}

namespace {

// Boundary ends (virtual ones included) in the positive direction from the basepoint.
std::vector<DartId> boundary_cycle(const Picture& p) {
    std::vector<DartId> out;
    const DartId g = p.global_basepoint();
    if (g == kNone) return out;
    DartId d = g;
    do {
        out.push_back(d);
        d = p.sigma_inv(d);
    } while (d != g);
    return out;
}

// Copies every node but the boundary of q into p; returns node and dart maps.
std::pair<std::vector<NodeId>, std::vector<DartId>> copy_into(Picture& p, const Picture& q, NodeId boundary_to) {
    std::vector<NodeId> nmap(q.node_count(), kNone);
    nmap[0] = boundary_to;
    for (NodeId n = 1; n < q.node_count(); ++n) {
        if (q.node(n).rotation.empty()) continue;
        nmap[n] = p.add_node(q.node(n).kind, q.node(n).relator, q.node(n).sign);
    }
    std::vector<DartId> dmap(q.dart_count(), kNone);
    for (DartId d = 0; d < q.dart_count(); ++d) {
        if (dmap[d] != kNone || q.dart(d).node == kNone) continue;
        const DartId t = q.dart(d).twin;
        const Dart& x = q.dart(d);
        const DartId nd = p.add_edge(nmap[x.node], nmap[q.dart(t).node],
                                     x.is_virtual ? std::nullopt : std::optional<Letter>(x.read));
        dmap[d] = nd;
        dmap[t] = p.dart(nd).twin;
    }
    for (NodeId n = 1; n < q.node_count(); ++n) {
        if (nmap[n] == kNone) continue;
        for (DartId d : q.node(n).rotation) p.insert_after(nmap[n], kNone, dmap[d]);
        if (q.node(n).basepoint != kNone) p.node_mut(nmap[n]).basepoint = dmap[q.node(n).basepoint];
    }
    return {nmap, dmap};
}

}  // namespace

Picture sum(const Picture& a, const Picture& b) {
    if (&a.presentation() != &b.presentation() && format_presentation(a.presentation()) != format_presentation(b.presentation()))
        throw PreconditionViolated("sum: pictures over different presentations");
    Picture out = a;
    const auto ca = boundary_cycle(a);
    const auto cb_src = boundary_cycle(b);
    auto [nmap, dmap] = copy_into(out, b, 0);
    std::vector<DartId> cw = ca;
    for (DartId d : cb_src) cw.push_back(dmap[d]);
    out.node_mut(0).rotation.clear();
    for (auto it = cw.rbegin(); it != cw.rend(); ++it) out.insert_after(0, kNone, *it);
    out.set_global_basepoint(cw.empty() ? kNone : cw.front());
    out.normalize();
    out.compact();
    return out;
}

std::optional<Enclosure> enclose(const Picture& p, const std::set<NodeId>& s) {
    if (s.empty() || s.count(0)) return std::nullopt;
    auto inside = [&](DartId d) { return s.count(p.dart(p.dart(d).twin).node) > 0; };
    // restricted rotation
    auto next_in = [&](DartId d) {
        DartId e = p.sigma(d);
        while (!inside(e)) e = p.sigma(e);
        return e;
    };
    // connectivity of S through its own edges
    {
        std::set<NodeId> seen{*s.begin()};
        std::deque<NodeId> q{*s.begin()};
        while (!q.empty()) {
            NodeId n = q.front();
            q.pop_front();
            for (DartId d : p.node(n).rotation)
                if (inside(d) && seen.insert(p.dart(p.dart(d).twin).node).second) q.push_back(p.dart(p.dart(d).twin).node);
        }
        if (seen.size() != s.size()) return std::nullopt;
    }
    Enclosure enc;
    std::size_t total_outside = 0;
    for (NodeId n : s)
        for (DartId d : p.node(n).rotation) total_outside += inside(d) ? 0 : 1;
    if (s.size() == 1) {
        const NodeId n = *s.begin();
        bool internal = false;
        for (DartId d : p.node(n).rotation) internal = internal || inside(d);
        if (!internal) {
            enc.outside = p.node(n).rotation;
            return enc;
        }
    }
    // faces of the submap; collect outside darts in each face walk
    std::map<DartId, bool> visited;
    for (NodeId n : s)
        for (DartId d0 : p.node(n).rotation) {
            if (!inside(d0) || visited.count(d0)) continue;
            std::vector<DartId> walk, outs;
            DartId e = d0;
            do {
                visited[e] = true;
                walk.push_back(e);
                const DartId arrive = p.dart(e).twin;
                const DartId next = next_in(arrive);
                for (DartId x = p.sigma(arrive); x != next; x = p.sigma(x)) outs.push_back(x);
                e = next;
            } while (e != d0);
            if (!outs.empty()) {
                if (!enc.outside.empty()) return std::nullopt;
                enc.outside = std::move(outs);
                enc.outer_face = std::move(walk);
            } else if (enc.outer_face.empty() && total_outside == 0) {
                enc.outer_face = walk;
            }
        }
    if (total_outside != enc.outside.size()) return std::nullopt;
    return enc;
}

Picture subpicture(const Picture& p, const std::set<NodeId>& s) {
    if (s.empty()) return Picture(p.presentation());
    auto enc = enclose(p, s);
    if (!enc) throw PathNotSimple("subpicture: the node set is not cut out by one simple closed curve");
    Picture out(p.presentation());
    std::map<NodeId, NodeId> nmap;
    for (NodeId n : s) nmap[n] = out.add_node(p.node(n).kind, p.node(n).relator, p.node(n).sign);
    std::map<DartId, DartId> dmap;
    for (NodeId n : s)
        for (DartId d : p.node(n).rotation) {
            if (dmap.count(d)) continue;
            const Dart& x = p.dart(d);
            const NodeId far = p.dart(x.twin).node;
            const NodeId to = s.count(far) ? nmap[far] : 0;
            const DartId nd = out.add_edge(nmap[n], to, x.is_virtual ? std::nullopt : std::optional<Letter>(x.read));
            dmap[d] = nd;
            if (s.count(far)) dmap[x.twin] = out.dart(nd).twin;
        }
    for (NodeId n : s) {
        for (DartId d : p.node(n).rotation) out.insert_after(nmap[n], kNone, dmap[d]);
        if (p.node(n).basepoint != kNone) out.node_mut(nmap[n]).basepoint = dmap[p.node(n).basepoint];
    }
    // around S counter-clockwise is clockwise around the new boundary
    for (auto it = enc->outside.rbegin(); it != enc->outside.rend(); ++it)
        out.insert_after(0, kNone, out.dart(dmap[*it]).twin);
    if (!enc->outside.empty()) out.set_global_basepoint(out.dart(dmap[enc->outside.front()]).twin);
    out.normalize();
    out.compact();
    return out;
}

Picture complement(const Picture& p, const std::set<NodeId>& s) {
    if (!is_spherical(p)) throw PreconditionViolated("complement: picture is not spherical");
    if (s.empty()) return p;
    auto enc = enclose(p, s);
    if (!enc) throw PathNotSimple("complement: the node set is not cut out by one simple closed curve");
    Picture q = p;
    // the old boundary becomes an ordinary hub; S collapses into the new boundary
    const NodeId hub = q.add_node(NodeKind::Junction);
    for (DartId d : p.node(0).rotation) q.insert_after(hub, kNone, d);
    q.node_mut(0).rotation.clear();
    q.set_global_basepoint(kNone);
    for (NodeId n : s) {
        for (DartId d : p.node(n).rotation)
            if (s.count(p.dart(p.dart(d).twin).node)) q.dart_mut(d).node = kNone;
        q.node_mut(n).rotation.clear();
    }
    for (DartId d : enc->outside) q.insert_after(0, kNone, d);
    if (!enc->outside.empty()) q.set_global_basepoint(enc->outside.back());
    q.normalize();
    q.compact();
    return mirror(q);
}

void delete_nodes(Picture& p, const std::set<NodeId>& s) {
    auto enc = enclose(p, s);
    if (!enc) throw PreconditionViolated("delete: the node set is not cut out by one simple closed curve");
    for (DartId d : enc->outside)
        if (!p.dart(d).is_virtual) throw PreconditionViolated("delete: an arc leaves the deleted region");
    const NodeId hub = p.add_node(NodeKind::Junction);
    for (NodeId n : s) p.node_mut(n).rotation.clear();
    for (DartId d : enc->outside) p.insert_after(hub, kNone, d);
    p.normalize();
    p.compact();
}

std::vector<NodeId> embed(Picture& p, DartId at, const Picture& q) {
    const NodeId hub = p.add_node(NodeKind::Junction);
    auto [nmap, dmap] = copy_into(p, q, hub);
    const DartId gq = q.global_basepoint();
    // rotation of q's boundary, started just after its basepoint corner
    std::vector<DartId> ring;
    if (gq != kNone)
        for (DartId d = q.sigma(gq);; d = q.sigma(d)) {
            ring.push_back(dmap[d]);
            if (d == gq) break;
        }
    for (DartId d : ring) p.insert_after(hub, kNone, d);
    const NodeId host = at == kNone ? 0 : p.dart(at).node;
    const DartId link = p.add_edge(host, hub, std::nullopt);
    p.insert_after(host, at, link);
    p.insert_after(hub, kNone, p.dart(link).twin);
    if (host == 0 && p.global_basepoint() == kNone) p.set_global_basepoint(link);
    std::vector<NodeId> out;
    for (NodeId n = 1; n < q.node_count(); ++n)
        if (nmap[n] != kNone) out.push_back(nmap[n]);
    p.normalize();
    return out;
}

namespace {

// Breadth-first encoding of the map reachable from `start`, restricted by `allowed`.
template <class Allowed>
std::string encode_from(const Picture& p, DartId start, Allowed allowed, bool with_rotation_offsets = true) {
    std::string code;
    std::map<NodeId, std::size_t> index;
    std::map<NodeId, DartId> entry;
    std::deque<NodeId> q;
    const NodeId root = p.dart(start).node;
    index[root] = 0;
    entry[root] = start;
    q.push_back(root);
    auto ring = [&](NodeId n) {
        std::vector<DartId> r;
        const DartId e = entry[n];
        for (DartId d = e;; ) {
            if (allowed(d)) r.push_back(d);
            d = p.sigma(d);
            if (d == e) break;
        }
        return r;
    };
    while (!q.empty()) {
        const NodeId n = q.front();
        q.pop_front();
        const Node& node = p.node(n);
        const auto r = ring(n);
        code += '(';
        code += "BVPJ"[static_cast<int>(node.kind)];
        if (node.kind == NodeKind::Vertex) {
            code += std::to_string(node.relator) + (node.sign > 0 ? "+" : "-");
            code += std::to_string(std::find(r.begin(), r.end(), node.basepoint) - r.begin());
        }
        for (DartId d : r) {
            const Dart& x = p.dart(d);
            const NodeId m = p.dart(x.twin).node;
            if (!index.count(m)) {
                index[m] = index.size();
                entry[m] = x.twin;
                q.push_back(m);
            }
            code += ' ';
            code += x.is_virtual ? std::string("~") : std::to_string(x.read.code());
            code += '>' + std::to_string(index[m]);
            if (with_rotation_offsets) {
                const auto rm = m == n ? r : ring(m);
                code += '@' + std::to_string(std::find(rm.begin(), rm.end(), x.twin) - rm.begin());
            }
        }
        code += ')';
    }
    return code;
}

}  // namespace

std::string canonical_code(const Picture& p) {
    const DartId g = p.global_basepoint();
    if (g == kNone) return "(B)";
    return encode_from(p, g, [](DartId) { return true; });
}

std::string enclosure_code(const Picture& p, const std::set<NodeId>& s, const Enclosure& e) {
    auto inside = [&](DartId d) { return s.count(p.dart(p.dart(d).twin).node) > 0; };
    std::vector<DartId> starts = e.outer_face;
    if (starts.empty())
        for (NodeId n : s)
            for (DartId d : p.node(n).rotation)
                if (inside(d)) starts.push_back(d);
    if (starts.empty()) {
        // one node and no internal edge
        const NodeId n = *s.begin();
        const Node& node = p.node(n);
        std::string c = "(";
        c += "BVPJ"[static_cast<int>(node.kind)];
        if (node.kind == NodeKind::Vertex) c += std::to_string(node.relator) + (node.sign > 0 ? "+" : "-");
        return c + ")";
    }
    std::string best;
    for (DartId d : starts) {
        std::string c = encode_from(p, d, inside);
        if (best.empty() || c < best) best = std::move(c);
    }
    return best;
}

}  // namespace peiffer
