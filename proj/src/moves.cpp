#include "peiffer/moves.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace peiffer {

namespace {

bool live(const Picture& p, DartId d) {
    if (d >= p.dart_count()) return false;
    const auto& rot = p.node(p.dart(d).node).rotation;
    return std::find(rot.begin(), rot.end(), d) != rot.end();
}

bool all_connected(const Picture& p) {
    std::vector<bool> seen(p.node_count(), false);
    std::deque<NodeId> q{0};
    seen[0] = true;
    while (!q.empty()) {
        const NodeId n = q.front();
        q.pop_front();
        for (DartId d : p.node(n).rotation) {
            const NodeId m = p.dart(p.dart(d).twin).node;
            if (!seen[m]) {
                seen[m] = true;
                q.push_back(m);
            }
        }
    }
    for (NodeId n = 1; n < p.node_count(); ++n)
        if (!seen[n] && !p.node(n).rotation.empty()) return false;
    return true;
}

// Labelled darts of n counter-clockwise starting at `from` (or the next labelled one after it).
std::vector<DartId> labelled_from(const Picture& p, DartId from) {
    std::vector<DartId> out;
    DartId d = from;
    do {
        if (!p.dart(d).is_virtual) out.push_back(d);
        d = p.sigma(d);
    } while (d != from);
    return out;
}

DartId next_labelled(const Picture& p, DartId d) {
    do d = p.sigma(d);
    while (p.dart(d).is_virtual);
    return d;
}

Word reads(const Picture& p, const std::vector<DartId>& ds) {
    Word w;
    for (DartId d : ds) w.push_back(p.dart(d).read);
    return w;
}

[[noreturn]] void fail(const std::string& what) { throw PreconditionViolated(what); }

void require_vertex(const Picture& p, NodeId n, const char* move) {
    if (n == 0 || n >= p.node_count() || p.node(n).kind != NodeKind::Vertex || p.node(n).rotation.empty())
        fail(std::string(move) + ": node " + std::to_string(n) + " is not a vertex");
}

void apply_bridge(Picture& p, const mv::Bridge& b) {
    const DartId x = b.x, y = b.y;
    if (!live(p, x) || !live(p, y)) fail("Bridge: dart is not in the picture");
    if (p.dart(x).is_virtual || p.dart(y).is_virtual) fail("Bridge: darts must lie on labelled arcs");
    if (x == y || p.dart(x).twin == y) fail("Bridge: darts lie on the same arc");
    if (p.dart(x).read != p.dart(y).read) fail("Bridge: the two arc segments carry different labels or orientations");
    const auto faces = compute_faces(p);
    if (faces.of_dart[x] != faces.of_dart[y]) fail("Bridge: the arc segments do not share a region");
    const DartId xt = p.dart(x).twin, yt = p.dart(y).twin;
    p.dart_mut(x).twin = yt;
    p.dart_mut(yt).twin = x;
    p.dart_mut(y).twin = xt;
    p.dart_mut(xt).twin = y;
    if (!all_connected(p)) {
        // both corners now lie in the face opened up between the two new arcs
        const DartId link = p.add_edge(p.dart(x).node, p.dart(y).node, std::nullopt);
        p.insert_after(p.dart(x).node, x, link);
        p.insert_after(p.dart(y).node, y, p.dart(link).twin);
    }
}

void apply_float_insert(Picture& p, const mv::FloatInsert& m) {
    if (m.at == kNone ? !p.node(0).rotation.empty() : !live(p, m.at)) fail("FloatInsert: no such corner");
    if (m.label.gen() >= p.presentation().generator_count()) fail("FloatInsert: label is not a generator");
    const NodeId host = m.at == kNone ? 0 : p.dart(m.at).node;
    const NodeId pin = p.add_node(NodeKind::Pin);
    const DartId inner = p.add_edge(pin, pin, m.label.inverse());
    const DartId link = p.add_edge(host, pin, std::nullopt);
    p.insert_after(pin, kNone, inner);
    p.insert_after(pin, kNone, p.dart(link).twin);
    p.insert_after(pin, kNone, p.dart(inner).twin);
    p.insert_after(host, m.at, link);
    if (host == 0 && p.global_basepoint() == kNone) p.set_global_basepoint(link);
}

void apply_float_delete(Picture& p, const mv::FloatDelete& m) {
    if (m.pin == 0 || m.pin >= p.node_count() || p.node(m.pin).kind != NodeKind::Pin) fail("FloatDelete: not a closed arc");
    std::vector<DartId> lab;
    for (DartId d : p.node(m.pin).rotation)
        if (!p.dart(d).is_virtual) lab.push_back(d);
    if (lab.size() != 2 || p.dart(lab[0]).twin != lab[1]) fail("FloatDelete: the arc is not closed");
    if (p.sigma(lab[0]) != lab[1] && p.sigma(lab[1]) != lab[0])
        fail("FloatDelete: the closed arc encircles part of the picture on both sides");
    p.remove_from_rotation(lab[0]);
    p.remove_from_rotation(lab[1]);
    p.node_mut(m.pin).kind = NodeKind::Junction;
}

bool basepoints_share_region(const Picture& p, const Faces& f, NodeId u, NodeId v) {
    return f.of_dart[p.node(u).basepoint] == f.of_dart[p.node(v).basepoint];
}

void apply_fold_delete(Picture& p, const mv::FoldDelete& m) {
    require_vertex(p, m.u, "FoldDelete");
    require_vertex(p, m.v, "FoldDelete");
    const Node &u = p.node(m.u), &v = p.node(m.v);
    if (m.u == m.v || u.relator != v.relator || u.sign != -v.sign)
        fail("FoldDelete: vertices need the same relator and opposite signs");
    if (labelled_component(p, m.u) != std::set<NodeId>{m.u, m.v})
        fail("FoldDelete: some arc at the pair does not join the two vertices");
    if (!basepoints_share_region(p, compute_faces(p), m.u, m.v)) fail("FoldDelete: basepoints lie in different regions");
    delete_nodes(p, {m.u, m.v});
}

std::set<NodeId> x_component(const Picture& p, NodeId n) {
    require_vertex(p, n, "DeleteX");
    return labelled_component(p, n);
}

void apply_delete_x(Picture& p, const mv::DeleteX& m, const PictureLibrary* lib) {
    if (!lib || m.entry >= lib->size()) fail("DeleteX: no such library entry");
    const auto s = x_component(p, m.node);
    const auto enc = enclose(p, s);
    if (!enc) fail("DeleteX: the component is not cut out by one simple closed curve");
    const auto& e = lib->entry(m.entry);
    if (enclosure_code(p, s, *enc) != (m.mirrored ? e.mirror_code : e.code))
        fail("DeleteX: the component around node " + std::to_string(m.node) + " is not a copy of " + e.name);
    delete_nodes(p, s);
}

}  // namespace

Picture dipole_picture(const Presentation& pres, RelatorId relator, int f, std::size_t outer) {
    const Word& r = pres.relator(relator);
    const std::size_t k = r.size();
    if (k == 0) throw PreconditionViolated("dipole: empty relator");
    const auto [root, period] = root_and_period(r);
    const std::size_t q = root.size();
    Picture p(pres);
    const NodeId u = p.add_node(NodeKind::Vertex, relator, 1);
    const NodeId v = p.add_node(NodeKind::Vertex, relator, -1);
    std::vector<DartId> a;
    for (Letter l : r) {
        a.push_back(p.add_edge(u, v, l));
        p.insert_after(u, kNone, a.back());
    }
    for (std::size_t j = k; j-- > 0;) p.insert_after(v, kNone, p.dart(a[j]).twin);
    const std::size_t shift = static_cast<std::size_t>(((f % static_cast<int>(period)) + period) % period) * q;
    p.node_mut(u).basepoint = a[0];
    p.node_mut(v).basepoint = p.dart(a[(2 * k - 1 - shift) % k]).twin;
    const DartId link = p.add_edge(0, u, std::nullopt);
    p.insert_after(0, kNone, link);
    p.insert_after(u, a[(outer % k + k - 1) % k], p.dart(link).twin);
    p.set_global_basepoint(link);
    p.compact();
    check(p);
    return p;
}

Picture apply_move(const Picture& src, const Move& m, const PictureLibrary* lib) {
    Picture p = src;
    std::visit(
        [&](const auto& mm) {
            using T = std::decay_t<decltype(mm)>;
            if constexpr (std::is_same_v<T, mv::Bridge>) {
                apply_bridge(p, mm);
            } else if constexpr (std::is_same_v<T, mv::FloatInsert>) {
                apply_float_insert(p, mm);
            } else if constexpr (std::is_same_v<T, mv::FloatDelete>) {
                apply_float_delete(p, mm);
            } else if constexpr (std::is_same_v<T, mv::FoldInsert>) {
                if (mm.at == kNone ? !p.node(0).rotation.empty() : !live(p, mm.at)) fail("FoldInsert: no such corner");
                if (mm.relator >= p.presentation().relator_count()) fail("FoldInsert: relator out of range");
                embed(p, mm.at, dipole_picture(p.presentation(), mm.relator, 0));
            } else if constexpr (std::is_same_v<T, mv::FoldDelete>) {
                apply_fold_delete(p, mm);
            } else if constexpr (std::is_same_v<T, mv::DeleteX>) {
                apply_delete_x(p, mm, lib);
            } else {
                if (!lib || mm.entry >= lib->size()) fail("InsertX: no such library entry");
                if (mm.at == kNone ? !p.node(0).rotation.empty() : !live(p, mm.at)) fail("InsertX: no such corner");
                const Picture& x = lib->entry(mm.entry).picture;
                embed(p, mm.at, mm.mirrored ? mirror(x) : x);
            }
        },
        m);
    p.normalize();
    p.compact();
    check(p);
    return p;
}

std::string describe(const Move& m) {
    std::ostringstream os;
    std::visit(
        [&](const auto& mm) {
            using T = std::decay_t<decltype(mm)>;
            if constexpr (std::is_same_v<T, mv::Bridge>)
                os << "BRIDGE darts " << mm.x << ", " << mm.y;
            else if constexpr (std::is_same_v<T, mv::FloatInsert>)
                os << "FLOAT^-1 at " << (mm.at == kNone ? std::string("empty") : std::to_string(mm.at));
            else if constexpr (std::is_same_v<T, mv::FloatDelete>)
                os << "FLOAT pin " << mm.pin;
            else if constexpr (std::is_same_v<T, mv::FoldInsert>)
                os << "FOLD^-1 relator " << mm.relator + 1 << " at "
                   << (mm.at == kNone ? std::string("empty") : std::to_string(mm.at));
            else if constexpr (std::is_same_v<T, mv::FoldDelete>)
                os << "FOLD vertices " << mm.u << ", " << mm.v;
            else if constexpr (std::is_same_v<T, mv::DeleteX>)
                os << "DELETE(X) entry " << mm.entry << (mm.mirrored ? " mirrored" : "") << " at vertex " << mm.node;
            else
                os << "DELETE(X)^-1 entry " << mm.entry << (mm.mirrored ? " mirrored" : "") << " at "
                   << (mm.at == kNone ? std::string("empty") : std::to_string(mm.at));
        },
        m);
    return os.str();
}

std::vector<DipoleReport> detect_dipoles(const Picture& p) {
    std::vector<DipoleReport> out;
    const auto faces = compute_faces(p);
    const auto& pres = p.presentation();
    for (DartId x = 0; x < p.dart_count(); ++x) {
        if (!live(p, x) || p.dart(x).is_virtual) continue;
        const DartId y = p.dart(x).twin;
        const NodeId u = p.dart(x).node, v = p.dart(y).node;
        if (u >= v || p.node(u).kind != NodeKind::Vertex || p.node(v).kind != NodeKind::Vertex) continue;
        const Node &nu = p.node(u), &nv = p.node(v);
        if (nu.relator != nv.relator || nu.sign != -nv.sign) continue;
        // corner just before x at u faces the corner just after y at v, and symmetrically
        const bool side1 = reads(p, labelled_from(p, x)) == inverse(reads(p, labelled_from(p, next_labelled(p, y))));
        const bool side2 = reads(p, labelled_from(p, next_labelled(p, x))) == inverse(reads(p, labelled_from(p, y)));
        if (!side1 && !side2) continue;
        DipoleReport r;
        r.arc = x;
        r.u = u;
        r.v = v;
        r.basepoints_share_region = basepoints_share_region(p, faces, u, v);
        if (labelled_component(p, u) == std::set<NodeId>{u, v}) {
            const auto lu = labelled_from(p, nu.basepoint), lv = labelled_from(p, nv.basepoint);
            const DartId c1 = side1 ? x : next_labelled(p, x);
            const DartId c2 = side1 ? next_labelled(p, y) : y;
            const std::size_t i = std::find(lu.begin(), lu.end(), c1) - lu.begin();
            const std::size_t j = std::find(lv.begin(), lv.end(), c2) - lv.begin();
            const Word& rel = pres.relator(nu.relator);
            const std::size_t k = rel.size();
            const auto [root, period] = root_and_period(rel);
            const std::size_t turn = (k - (i + j) % k) % k;
            bool every_arc = true;
            for (DartId d : lu) {
                const DartId t = p.dart(d).twin;
                every_arc = every_arc && reads(p, labelled_from(p, d)) == inverse(reads(p, labelled_from(p, next_labelled(p, t))));
            }
            if (every_arc && turn % root.size() == 0) {
                r.f = static_cast<int>((turn / root.size()) % period);
                r.kind = period > 1 && std::gcd(r.f, static_cast<int>(period)) == 1 ? DipoleReport::Kind::Primitive
                                                                                   : DipoleReport::Kind::Complete;
            }
        }
        out.push_back(r);
    }
    return out;
}

std::size_t PictureLibrary::add(std::string name, const Picture& x) {
    check(x);
    if (!is_spherical(x)) throw PreconditionViolated("library entry " + name + " is not spherical");
    const auto vs = x.vertices();
    if (vs.empty()) throw PreconditionViolated("library entry " + name + " has no vertices");
    const auto s = labelled_component(x, vs.front());
    if (s.size() != vs.size()) throw PreconditionViolated("library entry " + name + " must be one labelled component");
    const auto enc = enclose(x, s);
    if (!enc) throw PreconditionViolated("library entry " + name + " is not cut out by one curve");
    const Picture m = mirror(x);
    const auto ms = labelled_component(m, m.vertices().front());
    const auto menc = enclose(m, ms);
    if (!menc) throw PreconditionViolated("library entry " + name + " mirror is not cut out by one curve");
    entries_.push_back(LibraryEntry{std::move(name), x, enclosure_code(x, s, *enc), enclosure_code(m, ms, *menc)});
    return entries_.size() - 1;
}

std::optional<std::pair<std::size_t, bool>> PictureLibrary::find(const std::string& code) const {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].code == code) return std::pair{i, false};
        if (entries_[i].mirror_code == code) return std::pair{i, true};
    }
    return std::nullopt;
}

void PictureLibrary::add_primitive_dipoles() {
    for (RelatorId r = 0; r < pres_->relator_count(); ++r) {
        const auto [root, period] = root_and_period(pres_->relator(r));
        if (period < 2) continue;
        const std::size_t k = pres_->relator(r).size();
        for (int f = 1; f < static_cast<int>(period); ++f) {
            if (std::gcd(f, static_cast<int>(period)) != 1) continue;
            for (std::size_t outer = 0; outer < k; ++outer) {
                const Picture d = dipole_picture(*pres_, r, f, outer);
                const auto s = labelled_component(d, d.vertices().front());
                const std::string code = enclosure_code(d, s, *enclose(d, s));
                if (find(code)) continue;
                add("primitive dipole r" + std::to_string(r + 1) + " f=" + std::to_string(f) + " region " +
                        std::to_string(outer),
                    d);
            }
        }
    }
}

}  // namespace peiffer
