#include "peiffer/search.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

namespace peiffer {

bool trivial_pair(const Presentation& p, const Sequence& s, std::size_t pos, int* power_out) {
    if (pos + 1 >= s.size()) return false;
    const ConjTerm& x = s[pos];
    const ConjTerm& y = s[pos + 1];
    if (x.relator != y.relator || x.exponent != -y.exponent) return false;
    const Word d = free_reduce(concat(inverse(x.conjugator), y.conjugator));
    const Word root = root_and_period(p.relator(x.relator)).root;
    if (d.size() % root.size() != 0) return false;
    const int k = static_cast<int>(d.size() / root.size());
    for (int e : {k, -k}) {
        if (free_reduce(power(root, e)) == d) {
            if (power_out) *power_out = e;
            return true;
        }
    }
    return false;
}

Sequence apply_move(const Presentation& p, const Sequence& s, const SearchMove& m) {
    if (const auto* op = std::get_if<PeifferOp>(&m)) return apply_peiffer(p, s, *op);
    Sequence out = s;
    if (const auto* tc = std::get_if<op::TrivialCancel>(&m)) {
        if (!trivial_pair(p, s, tc->pos)) throw PreconditionViolated("TRIVIAL-CANCEL: pair is not a trivial pair");
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(tc->pos),
                  out.begin() + static_cast<std::ptrdiff_t>(tc->pos + 2));
        return out;
    }
    const auto& ti = std::get<op::TrivialInsert>(m);
    if (ti.pos > s.size()) throw PreconditionViolated("TRIVIAL-INSERT: position out of range");
    if (ti.term.relator >= p.relator_count()) throw PreconditionViolated("TRIVIAL-INSERT: relator out of range");
    const Word root = root_and_period(p.relator(ti.term.relator)).root;
    ConjTerm partner{free_reduce(concat(ti.term.conjugator, power(root, ti.power))), ti.term.relator,
                     -ti.term.exponent};
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(ti.pos), {ti.term, partner});
    return out;
}

std::string describe(const Presentation& p, const SearchMove& m) {
    if (const auto* op = std::get_if<PeifferOp>(&m)) return describe(p, *op);
    if (const auto* tc = std::get_if<op::TrivialCancel>(&m)) return "TRIVIAL-CANCEL " + std::to_string(tc->pos);
    const auto& ti = std::get<op::TrivialInsert>(m);
    return "TRIVIAL-INSERT " + std::to_string(ti.pos) + " " + p.word_text(ti.term.conjugator) + " " +
           std::to_string(ti.term.relator + 1) + (ti.term.exponent > 0 ? " + " : " - ") + std::to_string(ti.power);
}

std::string canonical_key(const Sequence& s) {
    std::string key;
    for (const auto& t : s) {
        key.push_back(t.exponent > 0 ? '+' : '-');
        key += std::to_string(t.relator);
        key.push_back(':');
        for (Letter l : free_reduce(t.conjugator)) {
            const auto c = l.code();
            key.push_back(static_cast<char>(c & 0xff));
            key.push_back(static_cast<char>((c >> 8) & 0xff));
        }
        key.push_back(';');
    }
    return key;
}

namespace {

std::vector<Child> children_of(const Presentation& p, const Sequence& s, std::size_t parent, bool allow_trivial) {
    std::vector<Child> out;
    auto emit = [&](SearchMove m) {
        Sequence next = apply_move(p, s, m);
        out.push_back(Child{canonical_key(next), std::move(next), std::move(m), parent});
    };
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i + 1] == s[i].inverse()) emit(PeifferOp{op::Del{i}});
        else if (allow_trivial && trivial_pair(p, s, i)) emit(op::TrivialCancel{i});
        emit(PeifferOp{op::Ex{i, op::Direction::Left}});
        emit(PeifferOp{op::Ex{i, op::Direction::Right}});
    }
    return out;
}

}  // namespace

std::vector<Child> expand_frontier_serial(const Presentation& p, const std::vector<Sequence>& frontier,
                                          bool allow_trivial) {
    std::vector<Child> out;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        auto kids = children_of(p, frontier[i], i, allow_trivial);
        std::move(kids.begin(), kids.end(), std::back_inserter(out));
    }
    return out;
}

std::vector<Child> expand_frontier_parallel(const Presentation& p, const std::vector<Sequence>& frontier,
                                            bool allow_trivial) {
    std::vector<std::vector<Child>> per(frontier.size());
    const long n = static_cast<long>(frontier.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < n; ++i)
        per[static_cast<std::size_t>(i)] =
            children_of(p, frontier[static_cast<std::size_t>(i)], static_cast<std::size_t>(i), allow_trivial);
    std::vector<Child> out;
    for (auto& kids : per) std::move(kids.begin(), kids.end(), std::back_inserter(out));
    return out;
}

Sequence replay(const Presentation& p, const Sequence& s, const std::vector<SearchMove>& script) {
    Sequence cur = s;
    for (const auto& m : script) cur = apply_move(p, cur, m);
    return cur;
}

namespace {

SearchMove inverse_move(const Presentation& p, const Sequence& before, const SearchMove& m) {
    if (const auto* op = std::get_if<PeifferOp>(&m)) return inverse_op(p, before, *op);
    if (const auto* tc = std::get_if<op::TrivialCancel>(&m)) {
        int k = 0;
        trivial_pair(p, before, tc->pos, &k);
        return op::TrivialInsert{tc->pos, before[tc->pos], k};
    }
    return op::TrivialCancel{std::get<op::TrivialInsert>(m).pos};
}

struct Node {
    Sequence sequence;
    std::string parent;
    std::optional<SearchMove> move;
};

using Visited = std::unordered_map<std::string, Node>;

// Moves from the root of `visited` to `key`.
std::vector<SearchMove> path_to(const Visited& visited, std::string key) {
    std::vector<SearchMove> out;
    for (;;) {
        const Node& n = visited.at(key);
        if (!n.move) break;
        out.push_back(*n.move);
        key = n.parent;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

// Moves from `key` back to the root of `visited`.
std::vector<SearchMove> path_from(const Presentation& p, const Visited& visited, std::string key) {
    std::vector<SearchMove> out;
    for (;;) {
        const Node& n = visited.at(key);
        if (!n.move) break;
        out.push_back(inverse_move(p, visited.at(n.parent).sequence, *n.move));
        key = n.parent;
    }
    return out;
}

std::vector<SearchMove> normalize_script(const Sequence& s) {
    std::vector<SearchMove> out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        Word r = free_reduce(s[k].conjugator);
        if (r != s[k].conjugator) out.push_back(PeifferOp{op::Sub{k, r}});
    }
    return out;
}

std::vector<SearchMove> denormalize_script(const Sequence& s) {
    std::vector<SearchMove> out;
    for (std::size_t k = 0; k < s.size(); ++k)
        if (free_reduce(s[k].conjugator) != s[k].conjugator) out.push_back(PeifferOp{op::Sub{k, s[k].conjugator}});
    return out;
}

class Expander {
public:
    Expander(const Presentation& p, const SearchBudget& b) : p_(p), budget_(b) {}
    std::vector<Child> operator()(const std::vector<Sequence>& frontier) const {
        return budget_.parallel ? expand_frontier_parallel(p_, frontier, budget_.allow_trivial)
                                : expand_frontier_serial(p_, frontier, budget_.allow_trivial);
    }

private:
    const Presentation& p_;
    const SearchBudget& budget_;
};

// Greedy collapse: bring the nearest cancelling pair together with EX-left and delete it.
Sequence greedy_collapse(const Presentation& p, Sequence cur, bool allow_trivial, std::vector<SearchMove>& script) {
    auto cancels = [&](const ConjTerm& x, const ConjTerm& y) {
        if (y == x.inverse()) return true;
        return allow_trivial && trivial_pair(p, Sequence{x, y}, 0);
    };
    for (;;) {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t gap = 1; gap < cur.size() && !best; ++gap)
            for (std::size_t i = 0; i + gap < cur.size(); ++i)
                if (cancels(cur[i], cur[i + gap])) {
                    best = {i, i + gap};
                    break;
                }
        if (!best) return cur;
        auto [i, j] = *best;
        for (std::size_t k = j; k > i + 1; --k) {
            SearchMove ex = PeifferOp{op::Ex{k - 1, op::Direction::Left}};
            cur = apply_move(p, cur, ex);
            script.push_back(ex);
        }
        SearchMove del = cur[i + 1] == cur[i].inverse() ? SearchMove{PeifferOp{op::Del{i}}}
                                                        : SearchMove{op::TrivialCancel{i}};
        cur = apply_move(p, cur, del);
        script.push_back(del);
    }
}

// Script reducing s (SUB-normalized) to the empty sequence, or nullopt.
std::optional<std::vector<SearchMove>> reduce_to_empty(const Presentation& p, const Sequence& s,
                                                       const SearchBudget& budget, std::size_t& explored) {
    std::vector<SearchMove> head;
    Sequence start = greedy_collapse(p, s, budget.allow_trivial, head);
    if (start.empty()) return head;

    Visited visited;
    visited.emplace(canonical_key(start), Node{start, {}, std::nullopt});
    // macro-moves: one search move followed by a greedy collapse
    std::unordered_map<std::string, std::vector<SearchMove>> macro;
    std::vector<std::string> frontier_keys{canonical_key(start)};
    Expander expand(p, budget);
    for (int depth = 0; depth < budget.max_depth && !frontier_keys.empty(); ++depth) {
        std::vector<Sequence> frontier;
        for (const auto& k : frontier_keys) frontier.push_back(visited.at(k).sequence);
        auto kids = expand(frontier);
        std::vector<std::string> next;
        for (auto& kid : kids) {
            std::vector<SearchMove> steps{kid.move};
            Sequence collapsed = greedy_collapse(p, kid.sequence, budget.allow_trivial, steps);
            std::string key = canonical_key(collapsed);
            if (visited.count(key)) continue;
            ++explored;
            macro[key] = steps;
            visited.emplace(key, Node{std::move(collapsed), frontier_keys[kid.parent], std::nullopt});
            if (visited.at(key).sequence.empty()) {
                std::vector<std::vector<SearchMove>> chain;
                for (std::string k = key; macro.count(k); k = visited.at(k).parent) chain.push_back(macro.at(k));
                std::vector<SearchMove> out = head;
                for (auto it = chain.rbegin(); it != chain.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
                return out;
            }
            next.push_back(std::move(key));
            if (visited.size() > budget.max_frontier) return std::nullopt;
        }
        frontier_keys = std::move(next);
    }
    return std::nullopt;
}

}  // namespace

EquivalenceResult peiffer_equivalent_bounded(const Presentation& p, const Sequence& a, const Sequence& b,
                                             const SearchBudget& budget) {
    EquivalenceResult res;
    if (a == b) {
        res.status = EquivalenceResult::Status::Equivalent;
        return res;
    }
    if (product(p, a) != product(p, b)) {
        res.status = EquivalenceResult::Status::NotEquivalent;
        return res;
    }
    const Sequence na = sub_normalize(a), nb = sub_normalize(b);
    std::vector<SearchMove> prefix = normalize_script(a);
    std::vector<SearchMove> suffix = denormalize_script(b);
    auto finish = [&](std::vector<SearchMove> middle) {
        res.status = EquivalenceResult::Status::Equivalent;
        res.script = prefix;
        res.script.insert(res.script.end(), middle.begin(), middle.end());
        res.script.insert(res.script.end(), suffix.begin(), suffix.end());
        return res;
    };

    Visited side[2];
    std::vector<std::string> frontier[2];
    const std::string ka = canonical_key(na), kb = canonical_key(nb);
    side[0].emplace(ka, Node{na, {}, std::nullopt});
    side[1].emplace(kb, Node{nb, {}, std::nullopt});
    frontier[0] = {ka};
    frontier[1] = {kb};
    if (ka == kb) return finish({});

    Expander expand(p, budget);
    for (int depth = 0; depth < budget.max_depth; ++depth) {
        const int s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
        if (frontier[s].empty()) break;
        std::vector<Sequence> seqs;
        for (const auto& k : frontier[s]) seqs.push_back(side[s].at(k).sequence);
        auto kids = expand(seqs);
        std::vector<std::string> next;
        std::optional<std::string> meet;
        for (auto& kid : kids) {
            if (side[s].count(kid.key)) continue;
            ++res.states_explored;
            side[s].emplace(kid.key, Node{std::move(kid.sequence), frontier[s][kid.parent], std::move(kid.move)});
            if (side[1 - s].count(kid.key)) {
                meet = kid.key;
                break;
            }
            next.push_back(kid.key);
        }
        if (meet) {
            std::vector<SearchMove> middle = path_to(side[0], *meet);
            auto back = path_from(p, side[1], *meet);
            middle.insert(middle.end(), back.begin(), back.end());
            return finish(std::move(middle));
        }
        frontier[s] = std::move(next);
        if (side[0].size() + side[1].size() > budget.max_frontier) break;
    }

    // Fallback: a ~ b iff a.b^-1 collapses to the empty sequence.
    const Sequence inv_b = inverse_sequence(nb);
    const Sequence joined = juxtapose(na, inv_b);
    auto collapse = reduce_to_empty(p, joined, budget, res.states_explored);
    if (!collapse) return res;
    std::vector<SearchMove> middle;
    for (std::size_t k = 0; k < nb.size(); ++k)
        middle.push_back(PeifferOp{op::Ins{na.size() + k, nb[nb.size() - 1 - k].inverse()}});
    middle.insert(middle.end(), collapse->begin(), collapse->end());
    return finish(std::move(middle));
}

}  // namespace peiffer
