#pragma once

#include "peiffer/sequence.hpp"

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace peiffer {

namespace op {
/// Deletes an adjacent pair (W,R,e),(W',R,-e) with W^-1 W' freely equal to a
/// power of the root of R. Such a pair is a conjugate of a sum of trivial sequences.
struct TrivialCancel {
    std::size_t pos;
};
/// Inverse of TrivialCancel: inserts (t, (W root^power, R, -e)) at pos.
struct TrivialInsert {
    std::size_t pos;
    ConjTerm term;
    int power;
};
}  // namespace op

using SearchMove = std::variant<PeifferOp, op::TrivialCancel, op::TrivialInsert>;

struct SearchBudget {
    int max_depth = 8;
    std::size_t max_frontier = 100000;
    /// Allow TrivialCancel/TrivialInsert, i.e. search modulo the trivial subgroup.
    bool allow_trivial = false;
    bool parallel = true;
};

struct EquivalenceResult {
    enum class Status { Equivalent, NotEquivalent, Unknown };
    Status status = Status::Unknown;
    /// For Equivalent: replays from the first argument to the second.
    std::vector<SearchMove> script;
    std::size_t states_explored = 0;
};

Sequence apply_move(const Presentation& p, const Sequence& s, const SearchMove& m);
std::string describe(const Presentation& p, const SearchMove& m);

/// True when the pair at pos, pos+1 qualifies for TrivialCancel; sets *power.
bool trivial_pair(const Presentation& p, const Sequence& s, std::size_t pos, int* power = nullptr);

/// Hash key of a SUB-normalized sequence.
std::string canonical_key(const Sequence& s);

/// One search node produced by frontier expansion.
struct Child {
    std::string key;
    Sequence sequence;
    SearchMove move;
    std::size_t parent;
};

/// Children of every frontier state, in frontier order then move order.
/// The OpenMP and serial variants return identical vectors.
std::vector<Child> expand_frontier_parallel(const Presentation& p, const std::vector<Sequence>& frontier,
                                            bool allow_trivial);
std::vector<Child> expand_frontier_serial(const Presentation& p, const std::vector<Sequence>& frontier,
                                          bool allow_trivial);

EquivalenceResult peiffer_equivalent_bounded(const Presentation& p, const Sequence& a, const Sequence& b,
                                             const SearchBudget& budget = {});

/// Replays a script; throws PreconditionViolated when a step does not apply.
Sequence replay(const Presentation& p, const Sequence& s, const std::vector<SearchMove>& script);

}  // namespace peiffer
