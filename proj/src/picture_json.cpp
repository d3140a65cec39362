#include "peiffer/picture.hpp"

#include <json.hpp>

#include <map>

namespace peiffer {

using nlohmann::json;

std::string to_json(const Picture& src) {
    Picture p = src;
    p.compact();
    const auto& alpha = p.presentation().alphabet();
    json j;
    json boundary = json::array();
    if (p.global_basepoint() != kNone) {
        DartId d = p.global_basepoint();
        do {
            boundary.push_back(d);
            d = p.sigma_inv(d);
        } while (d != p.global_basepoint());
    }
    j["boundary"] = boundary;
    j["global_basepoint"] = boundary.empty() ? json(nullptr) : json(0);
    json vertices = json::array(), pins = json::array(), junctions = json::array();
    for (NodeId n = 1; n < p.node_count(); ++n) {
        const Node& node = p.node(n);
        json e{{"id", n}, {"rotation", node.rotation}};
        if (node.kind == NodeKind::Vertex) {
            e["relator"] = node.relator + 1;
            e["sign"] = node.sign;
            e["basepoint"] = std::find(node.rotation.begin(), node.rotation.end(), node.basepoint) - node.rotation.begin();
            vertices.push_back(e);
        } else if (node.kind == NodeKind::Pin) {
            pins.push_back(e);
        } else {
            junctions.push_back(e);
        }
    }
    j["vertices"] = vertices;
    j["pins"] = pins;
    j["junctions"] = junctions;
    json arcs = json::array(), links = json::array();
    for (DartId d = 0; d < p.dart_count(); ++d) {
        const Dart& x = p.dart(d);
        if (d > x.twin) continue;
        if (x.is_virtual) {
            links.push_back(json{{"ends", {d, x.twin}}});
        } else {
            Letter g = x.read.inverted() ? x.read.inverse() : x.read;
            arcs.push_back(json{{"ends", {d, x.twin}}, {"label", std::string(1, alpha.name(g.gen()))}, {"normal", x.read.exponent()}});
        }
    }
    j["arcs"] = arcs;
    j["links"] = links;
    return j.dump(2);
}

Picture picture_from_json(const Presentation& pres, const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("picture JSON: ") + e.what());
    }
    Picture p(pres);
    try {
        std::map<std::size_t, NodeId> nodes;
        std::map<std::size_t, DartId> darts;
        std::map<std::size_t, NodeId> owner;
        auto declare = [&](const json& e, NodeKind kind) {
            const std::size_t id = e.at("id").get<std::size_t>();
            const NodeId n = kind == NodeKind::Vertex
                                 ? p.add_node(kind, e.at("relator").get<std::size_t>() - 1, e.at("sign").get<int>())
                                 : p.add_node(kind);
            nodes[id] = n;
            for (const auto& d : e.at("rotation")) owner[d.get<std::size_t>()] = n;
        };
        for (const auto& e : j.value("vertices", json::array())) declare(e, NodeKind::Vertex);
        for (const auto& e : j.value("pins", json::array())) declare(e, NodeKind::Pin);
        for (const auto& e : j.value("junctions", json::array())) declare(e, NodeKind::Junction);
        for (const auto& d : j.value("boundary", json::array())) owner[d.get<std::size_t>()] = 0;
        auto node_of = [&](std::size_t d) {
            auto it = owner.find(d);
            if (it == owner.end()) throw Error("picture JSON: arc end " + std::to_string(d) + " is not placed at any node");
            return it->second;
        };
        for (const auto& a : j.value("arcs", json::array())) {
            const auto ends = a.at("ends").get<std::vector<std::size_t>>();
            const std::string label = a.at("label").get<std::string>();
            if (ends.size() != 2 || label.size() != 1) throw Error("picture JSON: malformed arc");
            const Word w = pres.parse(label);
            Letter l = w[0];
            if (a.value("normal", 1) < 0) l = l.inverse();
            const DartId d = p.add_edge(node_of(ends[0]), node_of(ends[1]), l);
            darts[ends[0]] = d;
            darts[ends[1]] = p.dart(d).twin;
        }
        for (const auto& a : j.value("links", json::array())) {
            const auto ends = a.at("ends").get<std::vector<std::size_t>>();
            if (ends.size() != 2) throw Error("picture JSON: malformed link");
            const DartId d = p.add_edge(node_of(ends[0]), node_of(ends[1]), std::nullopt);
            darts[ends[0]] = d;
            darts[ends[1]] = p.dart(d).twin;
        }
        auto dart_of = [&](std::size_t d) {
            auto it = darts.find(d);
            if (it == darts.end()) throw Error("picture JSON: arc end " + std::to_string(d) + " has no arc");
            return it->second;
        };
        auto place = [&](const json& e) {
            const NodeId n = nodes.at(e.at("id").get<std::size_t>());
            for (const auto& d : e.at("rotation")) p.insert_after(n, kNone, dart_of(d.get<std::size_t>()));
            if (e.contains("basepoint")) {
                const auto k = e.at("basepoint").get<std::size_t>();
                if (k >= p.node(n).rotation.size()) throw Error("picture JSON: basepoint out of range");
                p.node_mut(n).basepoint = p.node(n).rotation[k];
            }
        };
        for (const auto& e : j.value("vertices", json::array())) place(e);
        for (const auto& e : j.value("pins", json::array())) place(e);
        for (const auto& e : j.value("junctions", json::array())) place(e);
        const auto boundary = j.value("boundary", std::vector<std::size_t>{});
        for (auto it = boundary.rbegin(); it != boundary.rend(); ++it) p.insert_after(0, kNone, dart_of(*it));
        if (!boundary.empty()) {
            const auto k = j.value("global_basepoint", json(0)).is_null() ? 0 : j.at("global_basepoint").get<std::size_t>();
            if (k >= boundary.size()) throw Error("picture JSON: global basepoint out of range");
            p.set_global_basepoint(dart_of(boundary[k]));
        }
        // keep the file's numbering when it is dense, so move loci written against it stay valid
        std::vector<NodeId> node_to(p.node_count(), kNone);
        std::vector<DartId> dart_to(p.dart_count(), kNone);
        node_to[0] = 0;
        bool dense = nodes.size() + 1 == p.node_count() && darts.size() == p.dart_count();
        for (auto [id, n] : nodes) dense = dense && id >= 1 && id < p.node_count() && (node_to[n] = id, true);
        for (auto [id, d] : darts) dense = dense && id < p.dart_count() && (dart_to[d] = id, true);
        if (dense) {
            std::vector<bool> seen_n(p.node_count(), false), seen_d(p.dart_count(), false);
            for (NodeId x : node_to) dense = dense && !seen_n[x] && (seen_n[x] = true);
            for (DartId x : dart_to) dense = dense && !seen_d[x] && (seen_d[x] = true);
        }
        if (dense) p.permute(node_to, dart_to);
    } catch (const json::exception& e) {
        throw Error(std::string("picture JSON: ") + e.what());
    }
    return p;
}

}  // namespace peiffer
