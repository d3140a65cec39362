#include "peiffer/picture.hpp"

#include <algorithm>
#include <deque>

namespace peiffer {

Picture::Picture(const Presentation& p) : pres_(&p) { nodes_.push_back(Node{NodeKind::Boundary, 0, 1, kNone, {}}); }

NodeId Picture::add_node(NodeKind kind, RelatorId relator, int sign) {
    nodes_.push_back(Node{kind, relator, sign, kNone, {}});
    return nodes_.size() - 1;
}

DartId Picture::add_edge(NodeId a, NodeId b, std::optional<Letter> read_at_a) {
    const DartId da = darts_.size(), db = da + 1;
    Dart x{a, db, !read_at_a.has_value(), read_at_a.value_or(Letter{})};
    Dart y{b, da, !read_at_a.has_value(), read_at_a ? read_at_a->inverse() : Letter{}};
    darts_.push_back(x);
    darts_.push_back(y);
    return da;
}

void Picture::insert_after(NodeId n, DartId after, DartId d) {
    auto& rot = nodes_.at(n).rotation;
    darts_.at(d).node = n;
    if (after == kNone) {
        rot.push_back(d);
        return;
    }
    auto it = std::find(rot.begin(), rot.end(), after);
    if (it == rot.end()) throw Error("insert_after: dart not at node");
    rot.insert(it + 1, d);
}

void Picture::remove_from_rotation(DartId d) {
    const NodeId n = darts_.at(d).node;
    auto& rot = nodes_.at(n).rotation;
    auto it = std::find(rot.begin(), rot.end(), d);
    if (it == rot.end()) return;
    if (n == 0 && gbp_ == d) gbp_ = rot.size() == 1 ? kNone : sigma_inv(d);
    rot.erase(it);
}

DartId Picture::sigma(DartId d) const {
    const auto& rot = nodes_[darts_[d].node].rotation;
    auto it = std::find(rot.begin(), rot.end(), d);
    ++it;
    return it == rot.end() ? rot.front() : *it;
}

DartId Picture::sigma_inv(DartId d) const {
    const auto& rot = nodes_[darts_[d].node].rotation;
    auto it = std::find(rot.begin(), rot.end(), d);
    return it == rot.begin() ? rot.back() : *(it - 1);
}

std::vector<NodeId> Picture::vertices() const {
    std::vector<NodeId> out;
    for (NodeId n = 0; n < nodes_.size(); ++n)
        if (nodes_[n].kind == NodeKind::Vertex) out.push_back(n);
    return out;
}

std::size_t Picture::vertex_count() const { return vertices().size(); }

std::size_t Picture::arc_count() const {
    std::size_t labelled = 0, split = 0;
    for (const auto& n : nodes_) {
        for (DartId d : n.rotation) labelled += darts_[d].is_virtual ? 0 : 1;
        if (n.kind != NodeKind::Pin) continue;
        // a pin on an ordinary arc cuts it into two edges
        bool loop = false;
        for (DartId d : n.rotation)
            if (!darts_[d].is_virtual && darts_[darts_[d].twin].node == darts_[d].node) loop = true;
        if (!loop) ++split;
    }
    return labelled / 2 - split;
}

void Picture::compact() {
    auto& b = nodes_[0].rotation;
    if (gbp_ != kNone) std::rotate(b.begin(), std::find(b.begin(), b.end(), gbp_), b.end());
    std::vector<NodeId> node_map(nodes_.size(), kNone);
    std::vector<Node> nodes;
    for (NodeId n = 0; n < nodes_.size(); ++n) {
        if (n != 0 && nodes_[n].rotation.empty()) continue;
        node_map[n] = nodes.size();
        nodes.push_back(nodes_[n]);
    }
    std::vector<DartId> dart_map(darts_.size(), kNone);
    std::vector<Dart> darts;
    for (const auto& n : nodes)
        for (DartId d : n.rotation) {
            dart_map[d] = darts.size();
            darts.push_back(darts_[d]);
        }
    for (auto& d : darts) {
        d.node = node_map[d.node];
        d.twin = dart_map[d.twin];
    }
    for (auto& n : nodes) {
        for (auto& d : n.rotation) d = dart_map[d];
        if (n.basepoint != kNone) n.basepoint = dart_map[n.basepoint];
    }
    gbp_ = gbp_ == kNone ? kNone : dart_map[gbp_];
    nodes_ = std::move(nodes);
    darts_ = std::move(darts);
}

void Picture::permute(const std::vector<NodeId>& node_to, const std::vector<DartId>& dart_to) {
    if (node_to.size() != nodes_.size() || dart_to.size() != darts_.size() || node_to[0] != 0)
        throw PreconditionViolated("permute: map sizes do not match");
    std::vector<Node> nodes(nodes_.size());
    std::vector<Dart> darts(darts_.size());
    std::vector<bool> hit_n(nodes_.size(), false), hit_d(darts_.size(), false);
    for (NodeId n = 0; n < nodes_.size(); ++n) {
        if (node_to[n] >= nodes.size() || hit_n[node_to[n]]) throw PreconditionViolated("permute: node map is not a permutation");
        hit_n[node_to[n]] = true;
        Node x = nodes_[n];
        for (auto& d : x.rotation) d = dart_to.at(d);
        if (x.basepoint != kNone) x.basepoint = dart_to.at(x.basepoint);
        nodes[node_to[n]] = std::move(x);
    }
    for (DartId d = 0; d < darts_.size(); ++d) {
        if (dart_to[d] >= darts.size() || hit_d[dart_to[d]]) throw PreconditionViolated("permute: dart map is not a permutation");
        hit_d[dart_to[d]] = true;
        Dart x = darts_[d];
        x.node = node_to.at(x.node);
        x.twin = dart_to.at(x.twin);
        darts[dart_to[d]] = x;
    }
    if (gbp_ != kNone) gbp_ = dart_to[gbp_];
    nodes_ = std::move(nodes);
    darts_ = std::move(darts);
}

namespace {

// Nodes reachable from `from` without using the edge of dart `skip`.
bool reachable_without(const Picture& p, NodeId from, NodeId to, DartId skip) {
    std::vector<bool> seen(p.node_count(), false);
    std::deque<NodeId> q{from};
    seen[from] = true;
    const DartId skip_twin = p.dart(skip).twin;
    while (!q.empty()) {
        NodeId n = q.front();
        q.pop_front();
        if (n == to) return true;
        for (DartId d : p.node(n).rotation) {
            if (d == skip || d == skip_twin) continue;
            NodeId m = p.dart(p.dart(d).twin).node;
            if (!seen[m]) {
                seen[m] = true;
                q.push_back(m);
            }
        }
    }
    return false;
}

void drop_edge(Picture& p, DartId d) {
    const DartId t = p.dart(d).twin;
    p.remove_from_rotation(d);
    p.remove_from_rotation(t);
}

}  // namespace

void Picture::normalize() {
    bool changed = true;
    while (changed) {
        changed = false;
        // virtual edges that close a cycle
        for (DartId d = 0; d < darts_.size(); ++d) {
            if (!darts_[d].is_virtual || d > darts_[d].twin) continue;
            const NodeId a = darts_[d].node;
            const auto& rot = nodes_[a].rotation;
            if (std::find(rot.begin(), rot.end(), d) == rot.end()) continue;
            if (reachable_without(*this, a, darts_[darts_[d].twin].node, d)) {
                drop_edge(*this, d);
                changed = true;
            }
        }
        for (NodeId n = 1; n < nodes_.size(); ++n) {
            Node& node = nodes_[n];
            if (node.kind == NodeKind::Junction) {
                if (node.rotation.size() == 1) {
                    drop_edge(*this, node.rotation.front());
                    changed = true;
                } else if (node.rotation.size() == 2) {
                    const DartId x = node.rotation[0], y = node.rotation[1];
                    const DartId fx = darts_[x].twin, fy = darts_[y].twin;
                    node.rotation.clear();
                    darts_[fx].twin = fy;
                    darts_[fy].twin = fx;
                    changed = true;
                }
            } else if (node.kind == NodeKind::Pin && node.rotation.size() == 2) {
                const DartId x = node.rotation[0], y = node.rotation[1];
                if (darts_[x].is_virtual || darts_[y].is_virtual || darts_[x].twin == y) continue;
                // a pin sitting on an ordinary arc: splice it out
                const DartId fx = darts_[x].twin, fy = darts_[y].twin;
                node.rotation.clear();
                darts_[fx].twin = fy;
                darts_[fy].twin = fx;
                changed = true;
            }
        }
    }
}

bool Picture::operator==(const Picture& o) const {
    if (nodes_.size() != o.nodes_.size() || darts_.size() != o.darts_.size() || gbp_ != o.gbp_) return false;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const Node &a = nodes_[i], &b = o.nodes_[i];
        if (a.kind != b.kind || a.rotation != b.rotation || a.basepoint != b.basepoint) return false;
        if (a.kind == NodeKind::Vertex && (a.relator != b.relator || a.sign != b.sign)) return false;
    }
    for (std::size_t i = 0; i < darts_.size(); ++i) {
        const Dart &a = darts_[i], &b = o.darts_[i];
        if (a.node != b.node || a.twin != b.twin || a.is_virtual != b.is_virtual) return false;
        if (!a.is_virtual && a.read != b.read) return false;
    }
    return true;
}

bool is_spherical(const Picture& p) {
    for (DartId d : p.node(0).rotation)
        if (!p.dart(d).is_virtual) return false;
    return true;
}

Faces compute_faces(const Picture& p) {
    Faces f;
    f.of_dart.assign(p.dart_count(), kNone);
    std::vector<bool> live(p.dart_count(), false);
    for (const auto& n : p.nodes())
        for (DartId d : n.rotation) live[d] = true;
    for (DartId d = 0; d < p.dart_count(); ++d) {
        if (!live[d] || f.of_dart[d] != kNone) continue;
        for (DartId e = d; f.of_dart[e] == kNone; e = p.phi(e)) f.of_dart[e] = f.count;
        ++f.count;
    }
    return f;
}

EulerCounts euler_counts(const Picture& p) {
    EulerCounts c;
    long darts = 0;
    for (const auto& n : p.nodes()) {
        if (&n != &p.nodes().front() && n.rotation.empty()) continue;
        ++c.v;
        darts += static_cast<long>(n.rotation.size());
        if (n.rotation.empty()) ++c.f;  // an isolated node sits in its own face
    }
    c.e = darts / 2;
    c.f += static_cast<long>(compute_faces(p).count);
    return c;
}

Word vertex_word(const Picture& p, NodeId v) {
    const Node& n = p.node(v);
    Word w;
    if (n.rotation.empty() || n.basepoint == kNone) return w;
    DartId d = n.basepoint;
    do {
        if (!p.dart(d).is_virtual) w.push_back(p.dart(d).read);
        d = p.sigma(d);
    } while (d != n.basepoint);
    return w;
}

Word boundary_label(const Picture& p) {
    Word w;
    const DartId g = p.global_basepoint();
    if (g == kNone) return w;
    DartId d = g;
    do {
        if (!p.dart(d).is_virtual) w.push_back(p.dart(d).read.inverse());
        d = p.sigma_inv(d);
    } while (d != g);
    return w;
}

std::vector<std::string> validate(const Picture& p) {
    std::vector<std::string> out;
    const auto& pres = p.presentation();
    if (p.node_count() == 0 || p.node(0).kind != NodeKind::Boundary) {
        out.push_back("node 0 must be the boundary");
        return out;
    }
    std::vector<int> seen(p.dart_count(), 0);
    for (NodeId n = 0; n < p.node_count(); ++n) {
        if (n > 0 && p.node(n).kind == NodeKind::Boundary) out.push_back("node " + std::to_string(n) + ": second boundary");
        for (DartId d : p.node(n).rotation) {
            if (d >= p.dart_count()) {
                out.push_back("node " + std::to_string(n) + ": dart out of range");
                continue;
            }
            if (++seen[d] > 1) out.push_back("dart " + std::to_string(d) + " appears twice");
            if (p.dart(d).node != n) out.push_back("dart " + std::to_string(d) + ": node back-reference mismatch");
        }
    }
    if (!out.empty()) return out;
    for (DartId d = 0; d < p.dart_count(); ++d) {
        if (!seen[d]) continue;
        const Dart& x = p.dart(d);
        if (x.twin >= p.dart_count() || !seen[x.twin] || p.dart(x.twin).twin != d) {
            out.push_back("dart " + std::to_string(d) + ": broken twin");
            continue;
        }
        const Dart& y = p.dart(x.twin);
        if (x.is_virtual != y.is_virtual) out.push_back("dart " + std::to_string(d) + ": virtual flag differs from twin");
        else if (!x.is_virtual) {
            if (y.read != x.read.inverse()) out.push_back("arc at dart " + std::to_string(d) + ": orientation mismatch");
            if (x.read.gen() >= pres.generator_count()) out.push_back("arc at dart " + std::to_string(d) + ": unknown generator");
        }
    }
    if (!out.empty()) return out;

    for (NodeId n = 1; n < p.node_count(); ++n) {
        const Node& node = p.node(n);
        if (node.rotation.empty()) continue;
        std::size_t labelled = 0;
        for (DartId d : node.rotation) labelled += p.dart(d).is_virtual ? 0 : 1;
        const std::string where = "node " + std::to_string(n);
        switch (node.kind) {
            case NodeKind::Vertex: {
                if (node.relator >= pres.relator_count()) {
                    out.push_back(where + ": relator out of range");
                    break;
                }
                const Word& r = pres.relator(node.relator);
                const Word expect = node.sign > 0 ? r : inverse(r);
                if (node.basepoint == kNone || p.dart(node.basepoint).node != n || p.dart(node.basepoint).is_virtual)
                    out.push_back(where + ": basepoint is not a labelled dart of the vertex");
                else if (vertex_word(p, n) != expect)
                    out.push_back(where + ": corner word " + pres.word_text(vertex_word(p, n)) + " differs from " +
                                  pres.word_text(expect));
                break;
            }
            case NodeKind::Pin: {
                std::vector<DartId> lab;
                for (DartId d : node.rotation)
                    if (!p.dart(d).is_virtual) lab.push_back(d);
                if (lab.size() != 2) out.push_back(where + ": pin must carry exactly two arc ends");
                else if (p.dart(lab[0]).read != p.dart(lab[1]).read.inverse())
                    out.push_back(where + ": pin arc ends disagree");
                break;
            }
            case NodeKind::Junction:
                if (labelled) out.push_back(where + ": junction carries an arc");
                break;
            case NodeKind::Boundary:
                break;
        }
    }
    // connectivity and genus
    std::vector<bool> reach(p.node_count(), false);
    std::deque<NodeId> q{0};
    reach[0] = true;
    while (!q.empty()) {
        NodeId n = q.front();
        q.pop_front();
        for (DartId d : p.node(n).rotation) {
            NodeId m = p.dart(p.dart(d).twin).node;
            if (!reach[m]) {
                reach[m] = true;
                q.push_back(m);
            }
        }
    }
    for (NodeId n = 1; n < p.node_count(); ++n)
        if (!p.node(n).rotation.empty() && !reach[n]) out.push_back("node " + std::to_string(n) + ": disconnected");
    if (!out.empty()) return out;
    const auto ec = euler_counts(p);
    if (ec.characteristic() != 2)
        out.push_back("Euler relation fails: V-E+F = " + std::to_string(ec.characteristic()));
    const auto faces = compute_faces(p);
    for (DartId d = 0; d < p.dart_count(); ++d)
        if (seen[d] && p.dart(d).is_virtual && faces.of_dart[d] != faces.of_dart[p.dart(d).twin])
            out.push_back("virtual link at dart " + std::to_string(d) + " separates two regions");
    const DartId g = p.global_basepoint();
    if (g == kNone ? !p.node(0).rotation.empty() : (g >= p.dart_count() || !seen[g] || p.dart(g).node != 0))
        out.push_back("global basepoint is not a boundary corner");
    return out;
}

void check(const Picture& p) {
    auto v = validate(p);
    if (!v.empty()) throw ValidationError(std::move(v));
}

std::set<NodeId> labelled_component(const Picture& p, NodeId n) {
    std::set<NodeId> out{n};
    std::deque<NodeId> q{n};
    while (!q.empty()) {
        NodeId x = q.front();
        q.pop_front();
        for (DartId d : p.node(x).rotation) {
            if (p.dart(d).is_virtual) continue;
            NodeId m = p.dart(p.dart(d).twin).node;
            if (m != 0 && out.insert(m).second) q.push_back(m);
        }
    }
    return out;
}

}  // namespace peiffer
