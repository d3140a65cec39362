#include "peiffer/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace peiffer {

namespace {

constexpr double kCx = 260, kCy = 260, kOuter = 240, kInner = 150;

struct Pt {
    double x, y;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

Pt on_circle(double r, double angle) { return {kCx + r * std::cos(angle), kCy - r * std::sin(angle)}; }

std::string letter_text(const Picture& p, Letter l) {
    Word w;
    w.push_back(l);
    return p.presentation().word_text(w);
}

}  // namespace

std::string render_svg(const Picture& p, const std::optional<std::vector<bool>>& upper) {
    const double pi = std::numbers::pi;
    std::vector<Pt> pos(p.node_count(), Pt{kCx, kCy});
    std::vector<NodeId> top, bottom;
    for (NodeId n = 1; n < p.node_count(); ++n)
        ((upper && n < upper->size() && !(*upper)[n]) ? bottom : top).push_back(n);
    auto spread = [&](const std::vector<NodeId>& ns, double from, double to) {
        for (std::size_t k = 0; k < ns.size(); ++k) {
            const double t = from + (to - from) * (k + 0.5) / ns.size();
            pos[ns[k]] = ns.size() == 1 && !upper ? Pt{kCx, kCy} : on_circle(kInner, t);
        }
    };
    if (upper) {
        spread(top, pi, 0);
        spread(bottom, pi, 2 * pi);
    } else {
        spread(top, pi / 2, pi / 2 + 2 * pi);
    }
    // boundary ends spaced along the outer circle in rotation order
    std::vector<Pt> end_at(p.dart_count(), Pt{kCx, kCy});
    const auto& brot = p.node(0).rotation;
    for (std::size_t k = 0; k < brot.size(); ++k) end_at[brot[k]] = on_circle(kOuter, pi / 2 + 2 * pi * k / brot.size());
    auto at = [&](DartId d) { return p.dart(d).node == 0 ? end_at[d] : pos[p.dart(d).node]; };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"520\" viewBox=\"0 0 520 520\">\n";
    o << "<circle cx=\"" << num(kCx) << "\" cy=\"" << num(kCy) << "\" r=\"" << num(kOuter)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    const Pt gb = on_circle(kOuter, pi / 2);
    o << "<circle cx=\"" << num(gb.x) << "\" cy=\"" << num(gb.y) << "\" r=\"4\" fill=\"black\"/>\n";
    if (upper)
        o << "<polyline points=\"" << num(kCx - kOuter) << "," << num(kCy) << " " << num(kCx + kOuter) << "," << num(kCy)
          << "\" stroke=\"crimson\" stroke-width=\"3\" fill=\"none\"/>\n";
    for (DartId d = 0; d < p.dart_count(); ++d) {
        const Dart& dd = p.dart(d);
        if (dd.node == kNone || dd.twin == kNone || d > dd.twin || dd.is_virtual) continue;
        const Pt a = at(d), b = at(dd.twin);
        if (dd.node == p.dart(dd.twin).node && dd.node != 0) {
            // closed arc around a pin
            o << "<circle cx=\"" << num(a.x) << "\" cy=\"" << num(a.y) << "\" r=\"18\" fill=\"none\" stroke=\"steelblue\"/>\n";
            o << "<text x=\"" << num(a.x + 20) << "\" y=\"" << num(a.y - 12) << "\" font-size=\"12\">"
              << letter_text(p, dd.read) << "</text>\n";
            continue;
        }
        o << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\"" << num(b.y)
          << "\" stroke=\"steelblue\"/>\n";
        o << "<text x=\"" << num((a.x + b.x) / 2 + 4) << "\" y=\"" << num((a.y + b.y) / 2 - 4) << "\" font-size=\"12\">"
          << letter_text(p, dd.read) << "</text>\n";
    }
    for (NodeId n = 1; n < p.node_count(); ++n) {
        const Node& nd = p.node(n);
        const Pt c = pos[n];
        if (nd.kind != NodeKind::Vertex) {
            o << "<circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\"3\" fill=\"gray\"/>\n";
            continue;
        }
        const bool r_side = !upper || (n < upper->size() && (*upper)[n]);
        o << "<circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\"16\" fill=\"" << (r_side ? "white" : "lavender")
          << "\" stroke=\"black\"/>\n";
        o << "<text x=\"" << num(c.x) << "\" y=\"" << num(c.y + 4) << "\" font-size=\"11\" text-anchor=\"middle\">"
          << nd.relator + 1 << (nd.sign > 0 ? "+" : "-") << "</text>\n";
        if (nd.basepoint != kNone) {
            const Pt t = at(p.dart(nd.basepoint).twin);
            const double len = std::hypot(t.x - c.x, t.y - c.y);
            if (len > 0) {
                const Pt m{c.x + 16 * (t.x - c.x) / len, c.y + 16 * (t.y - c.y) / len};
                o << "<circle cx=\"" << num(m.x) << "\" cy=\"" << num(m.y) << "\" r=\"3\" fill=\"crimson\"/>\n";
            }
        }
    }
    o << "</svg>\n";
    return o.str();
}

std::string render_svg(const EquatorPicture& e) {
    const Picture p = e.picture();
    std::vector<bool> upper(p.node_count(), true);
    const auto vs = p.vertices();
    // vertices keep term order through closing up
    for (std::size_t k = 0; k < vs.size() && k < e.size(); ++k) {
        const Node& n = p.node(vs[k]);
        const ConjTerm& t = e.terms()[k];
        upper[vs[k]] = n.relator == t.relator && n.sign == t.exponent
                           ? e.sides()[k] == Side::R
                           : e.presentation().in_family(n.relator, e.family());
    }
    return render_svg(p, upper);
}

std::string render_dot(const Picture& p) {
    std::ostringstream o;
    o << "graph picture {\n  n0 [label=\"B\", shape=doublecircle];\n";
    for (NodeId n = 1; n < p.node_count(); ++n) {
        const Node& nd = p.node(n);
        if (nd.kind == NodeKind::Vertex)
            o << "  n" << n << " [label=\"" << nd.relator + 1 << (nd.sign > 0 ? "+" : "-") << "\", shape=circle];\n";
        else
            o << "  n" << n << " [label=\"\", shape=point];\n";
    }
    for (DartId d = 0; d < p.dart_count(); ++d) {
        const Dart& dd = p.dart(d);
        if (dd.node == kNone || dd.twin == kNone || d > dd.twin) continue;
        o << "  n" << dd.node << " -- n" << p.dart(dd.twin).node;
        if (dd.is_virtual)
            o << " [style=dotted];\n";
        else
            o << " [label=\"" << letter_text(p, dd.read) << "\"];\n";
    }
    o << "}\n";
    return o.str();
}

}  // namespace peiffer
