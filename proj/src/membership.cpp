#include "peiffer/membership.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>

namespace peiffer {

std::set<RelatorId> target_relators(const Presentation& p, FamilyIndex i, ClosureTarget target) {
    return target == ClosureTarget::RClosure ? p.family(i) : p.complement_relators(i);
}

std::vector<int> evaluate(const PermutationRepresentation& rep, const Word& w) {
    const std::size_t degree = rep.images.empty() ? 0 : rep.images.front().size();
    std::vector<int> point(degree);
    std::iota(point.begin(), point.end(), 0);
    for (Letter l : w) {
        const auto& img = rep.images.at(l.gen());
        if (l.inverted()) {
            std::vector<int> inv(degree);
            for (std::size_t x = 0; x < degree; ++x) inv[static_cast<std::size_t>(img[x])] = static_cast<int>(x);
            for (auto& x : point) x = inv[static_cast<std::size_t>(x)];
        } else {
            for (auto& x : point) x = img[static_cast<std::size_t>(x)];
        }
    }
    return point;
}

namespace {

bool is_identity_perm(const std::vector<int>& perm) {
    for (std::size_t x = 0; x < perm.size(); ++x)
        if (perm[x] != static_cast<int>(x)) return false;
    return true;
}

std::vector<long> exponent_vector(const Word& w, std::size_t gens) {
    std::vector<long> v(gens, 0);
    for (Letter l : w) v.at(l.gen()) += l.exponent();
    return v;
}

MembershipResult yes(Sequence cert) {
    MembershipResult r;
    r.kind = MembershipResult::Kind::Yes;
    r.certificate = std::move(cert);
    return r;
}

MembershipResult no(std::string witness) {
    MembershipResult r;
    r.kind = MembershipResult::Kind::No;
    r.witness = std::move(witness);
    return r;
}

std::optional<std::map<GeneratorId, std::pair<RelatorId, int>>> killed_generators(
    const Presentation& p, const std::set<RelatorId>& relators) {
    std::map<GeneratorId, std::pair<RelatorId, int>> killed;
    for (RelatorId r : relators) {
        const Word& w = p.relator(r);
        if (w.size() != 1) return std::nullopt;
        killed[w[0].gen()] = {r, w[0].exponent()};
    }
    return killed;
}

MembershipResult free_quotient(const Presentation& p, const Word& w, const std::set<RelatorId>& relators) {
    auto killed = killed_generators(p, relators);
    if (!killed) throw StrategyInapplicable("FreeQuotient: target relators are not single generators");
    Sequence cert;
    Word prefix;
    for (Letter l : free_reduce(w)) {
        auto it = killed->find(l.gen());
        if (it == killed->end()) {
            prefix = multiply(prefix, Word{l});
            continue;
        }
        const auto [rid, sign] = it->second;
        cert.push_back(ConjTerm{prefix, rid, l.exponent() * sign});
    }
    if (!prefix.empty()) {
        std::string names;
        for (const auto& [g, _] : *killed) {
            if (!names.empty()) names += ",";
            names += p.alphabet().name(g);
        }
        return no("killing {" + names + "} leaves " + p.word_text(prefix) + " != 1");
    }
    return yes(std::move(cert));
}

// Single conjugate W rot(R^e) W^-1 detection; exact for one-term certificates.
std::optional<ConjTerm> single_term(const Presentation& p, const Word& w, const std::set<RelatorId>& relators) {
    const auto cr = cyclic_reduce(w);
    for (RelatorId r : relators) {
        for (int e : {1, -1}) {
            const Word re = e > 0 ? p.relator(r) : inverse(p.relator(r));
            const long k = find_rotation(re, cr.core);
            if (k < 0) continue;
            // core = u^-1 R^e u with u = re[0..k)
            const Word u = re.slice(0, static_cast<std::size_t>(k));
            return ConjTerm{free_reduce(concat(cr.conjugator, inverse(u))), r, e};
        }
    }
    return std::nullopt;
}

bool greedy_search(const Presentation& p, const Word& rem, const std::set<RelatorId>& relators, int depth,
                   int max_conj, Sequence& out) {
    if (rem.empty()) return true;
    if (depth == 0) return false;
    if (auto t = single_term(p, rem, relators)) {
        out.push_back(*t);
        return true;
    }
    if (depth == 1) return false;
    const std::size_t limit = std::min<std::size_t>(rem.size(), static_cast<std::size_t>(std::max(max_conj, 0)) + rem.size() / 2);
    for (std::size_t k = 0; k <= limit; ++k) {
        const Word w_prefix = rem.slice(0, k);
        for (RelatorId r : relators) {
            for (int e : {1, -1}) {
                const Word re = e > 0 ? p.relator(r) : inverse(p.relator(r));
                for (std::size_t rot = 0; rot < re.size(); ++rot) {
                    ConjTerm t{free_reduce(concat(w_prefix, inverse(re.slice(0, rot)))), r, e};
                    Word next = multiply(inverse(term_value(p, t)), rem);
                    if (next.size() >= rem.size()) continue;
                    out.push_back(t);
                    if (greedy_search(p, next, relators, depth - 1, max_conj, out)) return true;
                    out.pop_back();
                }
            }
        }
    }
    return false;
}

}  // namespace

bool abelian_obstruction(const Presentation& p, const Word& w, const std::set<RelatorId>& relators,
                         std::string* witness) {
    const std::size_t n = p.generator_count();
    std::vector<std::vector<long>> rows;
    for (RelatorId r : relators) rows.push_back(exponent_vector(p.relator(r), n));
    // integer row echelon form
    std::size_t top = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < n && top < rows.size(); ++col) {
        for (;;) {
            std::optional<std::size_t> best;
            for (std::size_t r = top; r < rows.size(); ++r)
                if (rows[r][col] != 0 && (!best || std::labs(rows[r][col]) < std::labs(rows[*best][col]))) best = r;
            if (!best) break;
            std::swap(rows[top], rows[*best]);
            bool clean = true;
            for (std::size_t r = top + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                const long q = rows[r][col] / rows[top][col];
                for (std::size_t c = 0; c < n; ++c) rows[r][c] -= q * rows[top][c];
                if (rows[r][col] != 0) clean = false;
            }
            if (clean) {
                pivots.push_back(col);
                ++top;
                break;
            }
        }
    }
    auto v = exponent_vector(free_reduce(w), n);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const std::size_t col = pivots[r];
        if (v[col] % rows[r][col] != 0) break;
        const long q = v[col] / rows[r][col];
        for (std::size_t c = 0; c < n; ++c) v[c] -= q * rows[r][c];
    }
    const bool obstructed = std::any_of(v.begin(), v.end(), [](long x) { return x != 0; });
    if (obstructed && witness) {
        std::string s;
        for (long x : exponent_vector(free_reduce(w), n)) s += (s.empty() ? "" : ",") + std::to_string(x);
        *witness = "abelianization: exponent vector (" + s + ") is outside the relator lattice";
    }
    return obstructed;
}

MembershipResult membership_in(const Presentation& p, const MembershipOracle& oracle, const Word& w,
                               const std::set<RelatorId>& relators) {
    using S = MembershipOracle::Strategy;
    const Word rw = free_reduce(w);
    if (rw.empty()) return yes({});
    if (oracle.strategy == S::FreeQuotient) return free_quotient(p, rw, relators);
    if (oracle.strategy == S::Auto && killed_generators(p, relators)) return free_quotient(p, rw, relators);

    if (oracle.strategy == S::Auto || oracle.strategy == S::FiniteQuotientTests) {
        std::string witness;
        if (abelian_obstruction(p, rw, relators, &witness)) return no(witness);
        for (const auto& rep : oracle.quotients) {
            bool applies = true;
            for (RelatorId r : relators) applies = applies && is_identity_perm(evaluate(rep, p.relator(r)));
            if (applies && !is_identity_perm(evaluate(rep, rw)))
                return no("finite quotient " + rep.name + " kills the relators but not the word");
        }
        if (oracle.strategy == S::FiniteQuotientTests) return {};
    }
    Sequence cert;
    if (greedy_search(p, rw, relators, oracle.max_terms, oracle.max_conjugator_len, cert) &&
        freely_equal(product(p, cert), rw))
        return yes(std::move(cert));
    return {};
}

MembershipResult membership(const Presentation& p, const MembershipOracle& oracle, const Word& w, FamilyIndex i,
                            ClosureTarget target) {
    return membership_in(p, oracle, w, target_relators(p, i, target));
}

}  // namespace peiffer
