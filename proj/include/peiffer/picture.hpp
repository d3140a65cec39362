#pragma once

#include "peiffer/sequence.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace peiffer {

class BoundaryNotTrivial : public Error {
public:
    BoundaryNotTrivial() : Error("BoundaryNotTrivial: boundary label is not freely trivial") {}
};
class PathNotSimple : public Error {
public:
    using Error::Error;
};
class BoundaryMismatch : public Error {
public:
    using Error::Error;
};

using NodeId = std::size_t;
using DartId = std::size_t;
inline constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// A picture is stored as one connected genus-0 rotation system.
//  - node 0 is the boundary: the disk complement collapsed to a point;
//  - vertices carry a relator, a sign and a basepoint dart;
//  - a closed arc is a pin node whose two labelled darts are twins;
//  - junctions only appear as hubs of virtual edges.
// Virtual edges carry no label. They are always isthmuses and only record
// which face a component sits in, so faces of the map are regions of the picture.
enum class NodeKind { Boundary, Vertex, Pin, Junction };

struct Node {
    NodeKind kind = NodeKind::Junction;
    RelatorId relator = 0;
    int sign = 1;
    /// Vertex: first labelled dart of the basic corner word, read counter-clockwise.
    DartId basepoint = kNone;
    /// Counter-clockwise order of incident darts.
    std::vector<DartId> rotation;
};

struct Dart {
    NodeId node = kNone;
    DartId twin = kNone;
    bool is_virtual = false;
    /// Letter read when crossing this arc end walking counter-clockwise around node.
    /// read(twin) == read^-1.
    Letter read;
};

struct EulerCounts {
    long v = 0, e = 0, f = 0;
    long characteristic() const { return v - e + f; }
};

struct Faces {
    std::vector<std::size_t> of_dart;  // kNone for dead darts
    std::size_t count = 0;
};

class Picture {
public:
    explicit Picture(const Presentation& p);

    const Presentation& presentation() const { return *pres_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Dart>& darts() const { return darts_; }
    const Node& node(NodeId n) const { return nodes_.at(n); }
    const Dart& dart(DartId d) const { return darts_.at(d); }
    Node& node_mut(NodeId n) { return nodes_.at(n); }
    Dart& dart_mut(DartId d) { return darts_.at(d); }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t dart_count() const { return darts_.size(); }

    /// Boundary dart whose corner (towards the next dart counter-clockwise) holds
    /// the global basepoint; kNone when the boundary node has no darts.
    DartId global_basepoint() const { return gbp_; }
    void set_global_basepoint(DartId d) { gbp_ = d; }

    NodeId add_node(NodeKind kind, RelatorId relator = 0, int sign = 1);
    /// Creates an edge; returns the dart at `a`. Darts are not placed in rotations.
    DartId add_edge(NodeId a, NodeId b, std::optional<Letter> read_at_a);
    /// Inserts d into node's rotation right after `after` (or at the end when kNone).
    void insert_after(NodeId node, DartId after, DartId d);
    void remove_from_rotation(DartId d);

    DartId sigma(DartId d) const;
    DartId sigma_inv(DartId d) const;
    DartId phi(DartId d) const { return sigma(darts_[d].twin); }

    std::vector<NodeId> vertices() const;
    std::size_t vertex_count() const;
    std::size_t arc_count() const;  // labelled edges, closed arcs included

    /// Drops nodes with kind Junction and no darts, darts not in any rotation,
    /// and renumbers densely: nodes keep relative order, darts follow rotations
    /// (the boundary rotation starting at the global basepoint).
    void compact();
    /// Renumbers: node n becomes node_to[n], dart d becomes dart_to[d]. Both must be permutations.
    void permute(const std::vector<NodeId>& node_to, const std::vector<DartId>& dart_to);
    /// Restores the structural invariants after surgery: removes virtual cycles,
    /// leaf and degree-2 junctions, and pins that no longer close up.
    void normalize();

    bool operator==(const Picture& o) const;

private:
    const Presentation* pres_;
    std::vector<Node> nodes_;
    std::vector<Dart> darts_;
    DartId gbp_ = kNone;
};

bool is_spherical(const Picture& p);

Faces compute_faces(const Picture& p);
EulerCounts euler_counts(const Picture& p);

/// Labels read counter-clockwise from the vertex basepoint; equals R^sign on a valid picture.
Word vertex_word(const Picture& p, NodeId v);

/// Report-style validation; empty result means valid.
std::vector<std::string> validate(const Picture& p);
/// Throws ValidationError when validate reports anything.
void check(const Picture& p);

/// Reading of the boundary in the positive direction from the global basepoint.
Word boundary_label(const Picture& p);

/// Balloons on strings: one vertex per term hanging inside nested strands for its conjugator.
Picture from_sequence(const Presentation& pres, const Sequence& s);

/// Caps off a freely trivial boundary. Throws BoundaryNotTrivial.
Picture close_to_sphere(const Picture& p);

/// A spray recorded as the peeling script that realises it: each step either
/// slides the basepoint across one boundary arc end or swallows a node whose
/// corner shares the basepoint region, which closes the path to that vertex.
struct SprayStep {
    enum class Kind { SlideCW, SlideCCW, Absorb };
    Kind kind = Kind::SlideCW;
    NodeId node = kNone;
    /// Absorb: the node's dart whose following corner is entered.
    DartId corner = kNone;
};
struct Spray {
    std::vector<SprayStep> steps;
    /// Vertices in the order their paths leave the basepoint.
    std::vector<NodeId> order;
    /// Path label W(gamma_k) for each entry of order.
    std::vector<Word> paths;
};

/// seed 0 gives the canonical spray (the one matching from_sequence); other
/// seeds give pseudo-random sprays.
Spray find_spray(const Picture& p, std::uint64_t seed = 0);
Sequence sequence_from_spray(const Picture& p, const Spray& s);

Picture mirror(const Picture& p);
Picture sum(const Picture& a, const Picture& b);

/// Nodes reachable from n through labelled arcs (boundary excluded).
std::set<NodeId> labelled_component(const Picture& p, NodeId n);

/// Region test for a node set S: the faces of the map restricted to S, and the
/// single face of that submap holding every dart leading out of S. nullopt when
/// the outgoing darts are spread over several faces (S is not cut out by one circle).
struct Enclosure {
    std::vector<DartId> outside;     // darts of S whose twin is outside S, in cyclic order around S
    std::vector<DartId> outer_face;  // face walk of the submap that faces the rest of the picture
};
std::optional<Enclosure> enclose(const Picture& p, const std::set<NodeId>& s);

/// Subpicture cut out by a simple closed curve around S. Throws PathNotSimple.
Picture subpicture(const Picture& p, const std::set<NodeId>& s);
/// Complement of the subpicture around S in spherical P, reflected so that its
/// boundary label equals the subpicture's. Throws PathNotSimple.
Picture complement(const Picture& p, const std::set<NodeId>& s);

/// Collapses the node set S (connected through its own edges) into one junction
/// keeping the outside darts in order, drops everything internal, then normalizes.
void delete_nodes(Picture& p, const std::set<NodeId>& s);

/// Embeds the interior of spherical q in the corner after dart `at` of p
/// (kNone: the only corner of an isolated boundary). Returns the new node ids.
std::vector<NodeId> embed(Picture& p, DartId at, const Picture& q);

/// Canonical string of the map with all labels, from the global basepoint.
std::string canonical_code(const Picture& p);
/// Canonical string of the submap on S seen from its outer face, minimised over
/// starting darts on that face. Compare against the mirror for mirrored matches.
std::string enclosure_code(const Picture& p, const std::set<NodeId>& s, const Enclosure& e);

std::string to_json(const Picture& p);
Picture picture_from_json(const Presentation& pres, const std::string& text);

}  // namespace peiffer
