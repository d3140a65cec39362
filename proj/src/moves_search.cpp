#include "peiffer/moves.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <queue>
#include <tuple>
#include <unordered_map>

namespace peiffer {

using nlohmann::json;

std::vector<Move> shrinking_moves(const Picture& p, const PictureLibrary& lib) {
    std::vector<Move> out;
    for (NodeId n = 1; n < p.node_count(); ++n) {
        const Node& node = p.node(n);
        if (node.kind != NodeKind::Pin) continue;
        std::vector<DartId> lab;
        for (DartId d : node.rotation)
            if (!p.dart(d).is_virtual) lab.push_back(d);
        if (lab.size() == 2 && p.dart(lab[0]).twin == lab[1] && (p.sigma(lab[0]) == lab[1] || p.sigma(lab[1]) == lab[0]))
            out.push_back(mv::FloatDelete{n});
    }
    const auto faces = compute_faces(p);
    std::vector<bool> done(p.node_count(), false);
    for (NodeId n = 1; n < p.node_count(); ++n) {
        if (done[n] || p.node(n).kind != NodeKind::Vertex || p.node(n).rotation.empty()) continue;
        const auto s = labelled_component(p, n);
        for (NodeId m : s) done[m] = true;
        const auto enc = enclose(p, s);
        if (!enc) continue;
        bool sealed = true;
        for (DartId d : enc->outside) sealed = sealed && p.dart(d).is_virtual;
        if (!sealed) continue;
        if (s.size() == 2) {
            const NodeId u = *s.begin(), v = *s.rbegin();
            const Node &nu = p.node(u), &nv = p.node(v);
            if (nu.kind == NodeKind::Vertex && nv.kind == NodeKind::Vertex && nu.relator == nv.relator &&
                nu.sign == -nv.sign && faces.of_dart[nu.basepoint] == faces.of_dart[nv.basepoint])
                out.push_back(mv::FoldDelete{u, v});
        }
        if (auto hit = lib.find(enclosure_code(p, s, *enc))) out.push_back(mv::DeleteX{n, hit->first, hit->second});
    }
    std::vector<std::vector<DartId>> by_face(faces.count);
    for (DartId d = 0; d < p.dart_count(); ++d)
        if (faces.of_dart[d] != kNone && !p.dart(d).is_virtual) by_face[faces.of_dart[d]].push_back(d);
    for (const auto& ds : by_face)
        for (std::size_t i = 0; i < ds.size(); ++i)
            for (std::size_t j = i + 1; j < ds.size(); ++j)
                if (ds[j] != p.dart(ds[i]).twin && p.dart(ds[i]).read == p.dart(ds[j]).read)
                    out.push_back(mv::Bridge{ds[i], ds[j]});
    return out;
}

MoveSearchResult search_to_empty(const Picture& start, const PictureLibrary& lib, const MoveBudget& budget) {
    if (!is_spherical(start)) throw PreconditionViolated("search_to_empty: picture is not spherical");
    struct State {
        Picture pic;
        std::size_t parent;
        std::optional<Move> move;
    };
    using Key = std::tuple<std::size_t, std::size_t, std::string, std::size_t>;
    std::vector<State> states;
    std::unordered_map<std::string, std::size_t> seen;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> open;
    auto push = [&](Picture pic, std::size_t parent, std::optional<Move> move) {
        std::string code = canonical_code(pic);
        if (seen.count(code)) return;
        const std::size_t id = states.size();
        seen.emplace(code, id);
        open.emplace(pic.vertex_count(), pic.arc_count(), std::move(code), id);
        states.push_back(State{std::move(pic), parent, std::move(move)});
    };
    push(start, kNone, std::nullopt);
    MoveSearchResult res;
    while (!open.empty() && res.states_explored < budget.max_states) {
        const std::size_t id = std::get<3>(open.top());
        open.pop();
        ++res.states_explored;
        if (states[id].pic.node_count() == 1) {
            for (std::size_t k = id; states[k].move; k = states[k].parent) res.script.push_back(*states[k].move);
            std::reverse(res.script.begin(), res.script.end());
            res.found = true;
            return res;
        }
        const Picture cur = states[id].pic;
        const auto moves = shrinking_moves(cur, lib);
        std::vector<std::optional<Picture>> kids(moves.size());
#pragma omp parallel for schedule(dynamic) if (budget.parallel && moves.size() > 8)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(moves.size()); ++i) {
            try {
                kids[i] = apply_move(cur, moves[i], &lib);
            } catch (const Error&) {
            }
        }
        for (std::size_t i = 0; i < moves.size(); ++i)
            if (kids[i]) push(std::move(*kids[i]), id, moves[i]);
    }
    return res;
}

Picture replay(const Picture& p, const MoveScript& s, const PictureLibrary* lib,
               const std::function<void(std::size_t, const Picture&)>& each) {
    Picture cur = p;
    for (std::size_t i = 0; i < s.size(); ++i) {
        try {
            cur = apply_move(cur, s[i], lib);
        } catch (const PreconditionViolated& e) {
            throw PreconditionViolated("step " + std::to_string(i + 1) + ": " + e.what());
        }
        if (each) each(i, cur);
    }
    return cur;
}

Picture replace_subpicture(const Picture& p, const std::set<NodeId>& s, const PictureLibrary& lib, std::size_t entry,
                           const std::set<NodeId>& part) {
    const Picture& x = lib.entry(entry).picture;
    const Picture c = complement(x, part);
    if (s.empty()) {
        if (!boundary_label(c).empty()) throw BoundaryMismatch("replace: an empty region needs a closed complement");
        Picture out = p;
        embed(out, out.global_basepoint(), c);
        out.normalize();
        out.compact();
        check(out);
        return out;
    }
    const auto enc = enclose(p, s);
    if (!enc) throw PathNotSimple("replace: the node set is not cut out by one simple closed curve");
    if (boundary_label(subpicture(p, s)) != boundary_label(c))
        throw BoundaryMismatch("replace: boundary labels differ: " + p.presentation().word_text(boundary_label(subpicture(p, s))) +
                               " vs " + p.presentation().word_text(boundary_label(c)));
    for (DartId d : enc->outside)
        if (p.dart(d).is_virtual) throw PreconditionViolated("replace: the region must not hold separate components");
    for (DartId d : c.node(0).rotation)
        if (c.dart(d).is_virtual) throw PreconditionViolated("replace: the complement must meet its boundary only in arcs");

    Picture out = p;
    std::map<NodeId, NodeId> nmap;
    for (NodeId n = 1; n < c.node_count(); ++n) {
        const Node& cn = c.node(n);
        nmap[n] = out.add_node(cn.kind, cn.relator, cn.sign);
    }
    // boundary ends of c in the positive direction, matched to the outside ends in enclosure order
    std::vector<DartId> ends;
    for (DartId d = c.global_basepoint(), first = d; d != kNone;) {
        ends.push_back(d);
        d = c.sigma_inv(d);
        if (d == first) break;
    }
    std::map<DartId, DartId> dmap;
    for (DartId d = 0; d < c.dart_count(); ++d) {
        const Dart& cd = c.dart(d);
        if (cd.node == 0 || dmap.count(d)) continue;
        const Dart& tw = c.dart(cd.twin);
        if (tw.node == 0) continue;
        const DartId nd = out.add_edge(nmap[cd.node], nmap[tw.node], cd.is_virtual ? std::nullopt : std::optional<Letter>(cd.read));
        dmap[d] = nd;
        dmap[cd.twin] = out.dart(nd).twin;
    }
    // dangling inner ends towards the boundary, glued to the outside ends
    for (std::size_t k = 0; k < ends.size(); ++k) {
        const DartId inner = c.dart(ends[k]).twin;
        const DartId outer_end = out.dart(enc->outside[k]).twin;
        const DartId nd = out.add_edge(nmap[c.dart(inner).node], 0, c.dart(inner).read);
        out.dart_mut(nd).twin = outer_end;
        out.dart_mut(outer_end).twin = nd;
        dmap[inner] = nd;
    }
    for (NodeId n : s) out.node_mut(n).rotation.clear();
    for (NodeId n = 1; n < c.node_count(); ++n) {
        for (DartId d : c.node(n).rotation) out.insert_after(nmap[n], kNone, dmap.at(d));
        if (c.node(n).basepoint != kNone) out.node_mut(nmap[n]).basepoint = dmap.at(c.node(n).basepoint);
    }
    out.normalize();
    out.compact();
    check(out);
    return out;
}

namespace {

json at_json(DartId d) { return d == kNone ? json(nullptr) : json(d); }
DartId json_at(const json& j) { return j.is_null() ? kNone : j.get<DartId>(); }

}  // namespace

std::string script_to_json(const MoveScript& s) {
    json arr = json::array();
    for (const auto& m : s) {
        json j;
        std::visit(
            [&](const auto& mm) {
                using T = std::decay_t<decltype(mm)>;
                if constexpr (std::is_same_v<T, mv::Bridge>)
                    j = {{"move", "Bridge"}, {"x", mm.x}, {"y", mm.y}};
                else if constexpr (std::is_same_v<T, mv::FloatInsert>)
                    j = {{"move", "FloatInsert"}, {"at", at_json(mm.at)}, {"generator", mm.label.gen()}, {"exponent", mm.label.exponent()}};
                else if constexpr (std::is_same_v<T, mv::FloatDelete>)
                    j = {{"move", "FloatDelete"}, {"pin", mm.pin}};
                else if constexpr (std::is_same_v<T, mv::FoldInsert>)
                    j = {{"move", "FoldInsert"}, {"at", at_json(mm.at)}, {"relator", mm.relator + 1}};
                else if constexpr (std::is_same_v<T, mv::FoldDelete>)
                    j = {{"move", "FoldDelete"}, {"u", mm.u}, {"v", mm.v}};
                else if constexpr (std::is_same_v<T, mv::DeleteX>)
                    j = {{"move", "DeleteX"}, {"node", mm.node}, {"entry", mm.entry}, {"mirrored", mm.mirrored}};
                else
                    j = {{"move", "InsertX"}, {"at", at_json(mm.at)}, {"entry", mm.entry}, {"mirrored", mm.mirrored}};
            },
            m);
        arr.push_back(j);
    }
    return arr.dump(2);
}

MoveScript script_from_json(const std::string& text) {
    MoveScript out;
    try {
        for (const auto& j : json::parse(text)) {
            const std::string kind = j.at("move").get<std::string>();
            if (kind == "Bridge")
                out.push_back(mv::Bridge{j.at("x").get<DartId>(), j.at("y").get<DartId>()});
            else if (kind == "FloatInsert")
                out.push_back(mv::FloatInsert{json_at(j.at("at")), Letter(j.at("generator").get<GeneratorId>(), j.value("exponent", 1))});
            else if (kind == "FloatDelete")
                out.push_back(mv::FloatDelete{j.at("pin").get<NodeId>()});
            else if (kind == "FoldInsert")
                out.push_back(mv::FoldInsert{json_at(j.at("at")), j.at("relator").get<RelatorId>() - 1});
            else if (kind == "FoldDelete")
                out.push_back(mv::FoldDelete{j.at("u").get<NodeId>(), j.at("v").get<NodeId>()});
            else if (kind == "DeleteX")
                out.push_back(mv::DeleteX{j.at("node").get<NodeId>(), j.at("entry").get<std::size_t>(), j.value("mirrored", false)});
            else if (kind == "InsertX")
                out.push_back(mv::InsertX{json_at(j.at("at")), j.at("entry").get<std::size_t>(), j.value("mirrored", false)});
            else
                throw Error("move script: unknown move " + kind);
        }
    } catch (const json::exception& e) {
        throw Error(std::string("move script: ") + e.what());
    }
    return out;
}

}  // namespace peiffer
