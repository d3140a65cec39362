#pragma once

#include "peiffer/picture.hpp"

#include <functional>
#include <variant>

namespace peiffer {

namespace mv {
/// x and y lie on one region's boundary walk, on distinct labelled arcs, and read
/// the same letter when crossed out of that region. The arcs are cut and rejoined.
struct Bridge {
    DartId x = kNone, y = kNone;
};
/// A closed arc labelled `label` dropped into the corner after dart `at`
/// (kNone: the empty picture). It encircles nothing.
struct FloatInsert {
    DartId at = kNone;
    Letter label;
};
/// Removes a closed arc one of whose sides is empty.
struct FloatDelete {
    NodeId pin = kNone;
};
/// Drops a folding pair for `relator` (first vertex positive) into the corner after `at`.
struct FoldInsert {
    DartId at = kNone;
    RelatorId relator = 0;
};
struct FoldDelete {
    NodeId u = kNone, v = kNone;
};
/// Deletes the labelled component containing `node`, which must be a copy of
/// library entry `entry` (or of its mirror image).
struct DeleteX {
    NodeId node = kNone;
    std::size_t entry = 0;
    bool mirrored = false;
};
struct InsertX {
    DartId at = kNone;
    std::size_t entry = 0;
    bool mirrored = false;
};
}  // namespace mv

using Move = std::variant<mv::Bridge, mv::FloatInsert, mv::FloatDelete, mv::FoldInsert, mv::FoldDelete, mv::DeleteX,
                          mv::InsertX>;
using MoveScript = std::vector<Move>;

struct LibraryEntry {
    std::string name;
    Picture picture;
    std::string code;         // enclosure code of the single labelled component
    std::string mirror_code;  // same for the mirror image
};

/// The collection X. Entries are spherical pictures with one labelled component.
class PictureLibrary {
public:
    explicit PictureLibrary(const Presentation& p) : pres_(&p) {}

    const Presentation& presentation() const { return *pres_; }
    std::size_t add(std::string name, const Picture& p);
    /// Adds every primitive dipole of every proper-power relator, once per code.
    void add_primitive_dipoles();

    const std::vector<LibraryEntry>& entries() const { return entries_; }
    const LibraryEntry& entry(std::size_t i) const { return entries_.at(i); }
    std::size_t size() const { return entries_.size(); }
    /// (entry, mirrored) whose code equals `code`.
    std::optional<std::pair<std::size_t, bool>> find(const std::string& code) const;

private:
    const Presentation* pres_;
    std::vector<LibraryEntry> entries_;
};

/// Complete dipole on `relator` with the second basepoint turned f root-lengths
/// away from the first; B is attached in region `outer` (between arcs outer-1 and outer).
Picture dipole_picture(const Presentation& pres, RelatorId relator, int f, std::size_t outer = 0);

Picture apply_move(const Picture& p, const Move& m, const PictureLibrary* lib = nullptr);
std::string describe(const Move& m);

struct DipoleReport {
    enum class Kind { Dipole, Complete, Primitive };
    DartId arc = kNone;  // dart at u
    NodeId u = kNone, v = kNone;
    Kind kind = Kind::Dipole;
    /// Complete dipoles: exponent of the root along a path between the basepoints, mod p.
    int f = 0;
    bool basepoints_share_region = false;
};
std::vector<DipoleReport> detect_dipoles(const Picture& p);

struct MoveBudget {
    std::size_t max_states = 20000;
    bool parallel = true;
};
struct MoveSearchResult {
    bool found = false;
    MoveScript script;
    std::size_t states_explored = 0;
};
/// Best-first on (vertices, arcs, canonical code) over Bridge, FloatDelete,
/// FoldDelete and DeleteX. Deterministic for a given budget.
MoveSearchResult search_to_empty(const Picture& p, const PictureLibrary& lib, const MoveBudget& budget = {});

/// Candidate moves that do not grow the picture, in a fixed order.
std::vector<Move> shrinking_moves(const Picture& p, const PictureLibrary& lib);

/// Replays a script; calls `each` after every step.
Picture replay(const Picture& p, const MoveScript& s, const PictureLibrary* lib = nullptr,
               const std::function<void(std::size_t, const Picture&)>& each = {});

/// Swaps the subpicture around S for the complement of the matching part of X
/// entry `entry`: `part` is a node set of the entry whose subpicture has the same
/// boundary label as the one around S. Throws BoundaryMismatch.
Picture replace_subpicture(const Picture& p, const std::set<NodeId>& s, const PictureLibrary& lib, std::size_t entry,
                           const std::set<NodeId>& part);

std::string script_to_json(const MoveScript& s);
MoveScript script_from_json(const std::string& text);

}  // namespace peiffer
