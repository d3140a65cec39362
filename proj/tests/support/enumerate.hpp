#pragma once

// Exhaustive generator of small spherical pictures over a one-relator
// presentation <a | a^p>. Used as an oracle for the reduction criterion.

#include "peiffer/moves.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace peiffer::testing {

// Connected labelled maps: `pairs` positive and `pairs` negative vertices of degree p.
// Every vertex reads a^{+-p}, so arcs join positive to negative ends. We run over
// all matchings of ends, all basepoints and every region for the boundary.
inline std::vector<Picture> connected_power_pictures(const Presentation& pres, int pairs) {
    const std::size_t p = pres.relator(0).size();
    const std::size_t ends = pairs * p;
    std::vector<Picture> out;
    std::map<std::string, bool> seen;
    std::vector<std::size_t> perm(ends);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Picture m(pres);
        std::vector<NodeId> pos, neg;
        for (int i = 0; i < pairs; ++i) pos.push_back(m.add_node(NodeKind::Vertex, 0, 1));
        for (int i = 0; i < pairs; ++i) neg.push_back(m.add_node(NodeKind::Vertex, 0, -1));
        std::vector<DartId> at_pos(ends), at_neg(ends);
        for (std::size_t e = 0; e < ends; ++e) {
            at_pos[e] = m.add_edge(pos[e / p], neg[perm[e] / p], Letter(0, 1));
            at_neg[perm[e]] = m.dart(at_pos[e]).twin;
        }
        for (std::size_t e = 0; e < ends; ++e) m.insert_after(pos[e / p], kNone, at_pos[e]);
        for (std::size_t e = 0; e < ends; ++e) m.insert_after(neg[e / p], kNone, at_neg[e]);
        // connected and planar without the boundary
        const auto faces = compute_faces(m);
        const long v = 2 * pairs, e = static_cast<long>(ends);
        if (labelled_component(m, pos[0]).size() != static_cast<std::size_t>(v)) continue;
        if (v - e + static_cast<long>(faces.count) != 2) continue;
        for (std::size_t f = 0; f < faces.count; ++f) {
            DartId rep = kNone;
            for (DartId d = 0; d < m.dart_count() && rep == kNone; ++d)
                if (faces.of_dart[d] == f) rep = d;
            std::vector<std::size_t> bp(v, 0);
            for (;;) {
                Picture q = m;
                for (long i = 0; i < v; ++i) {
                    const NodeId n = i < pairs ? pos[i] : neg[i - pairs];
                    q.node_mut(n).basepoint = q.node(n).rotation[bp[i]];
                }
                const DartId link = q.add_edge(0, q.dart(rep).node, std::nullopt);
                q.insert_after(0, kNone, link);
                q.insert_after(q.dart(rep).node, q.sigma_inv(rep), q.dart(link).twin);
                q.set_global_basepoint(link);
                q.compact();
                std::string code = canonical_code(q);
                if (!seen.count(code)) {
                    seen[code] = true;
                    out.push_back(std::move(q));
                }
                std::size_t i = 0;
                while (i < bp.size() && ++bp[i] == p) bp[i++] = 0;
                if (i == bp.size()) break;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Two-component pictures: b dropped into every corner of a (side by side or nested).
inline std::vector<Picture> two_component_pictures(const std::vector<Picture>& parts) {
    std::vector<Picture> out;
    std::map<std::string, bool> seen;
    for (const auto& a : parts)
        for (const auto& b : parts)
            for (DartId at = 0; at < a.dart_count(); ++at) {
                Picture q = a;
                embed(q, at, b);
                q.compact();
                std::string code = canonical_code(q);
                if (seen.count(code)) continue;
                seen[code] = true;
                out.push_back(std::move(q));
            }
    return out;
}

// Every spherical picture over <a | a^p> with at most four vertices and no closed arcs.
inline std::vector<Picture> small_spherical_pictures(const Presentation& pres) {
    std::vector<Picture> out;
    auto two = connected_power_pictures(pres, 1);
    auto four = connected_power_pictures(pres, 2);
    auto sums = two_component_pictures(two);
    out.insert(out.end(), two.begin(), two.end());
    out.insert(out.end(), four.begin(), four.end());
    out.insert(out.end(), sums.begin(), sums.end());
    return out;
}

}  // namespace peiffer::testing
