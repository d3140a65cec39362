#include "peiffer/sequence.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace peiffer {

Word term_word(const Presentation& p, const ConjTerm& t) {
    const Word& r = p.relator(t.relator);
    return concat({t.conjugator, t.exponent > 0 ? r : inverse(r), inverse(t.conjugator)});
}

Word term_value(const Presentation& p, const ConjTerm& t) { return free_reduce(term_word(p, t)); }

Word product(const Presentation& p, const Sequence& s) {
    Word out;
    for (const auto& t : s) out.append(term_word(p, t));
    return free_reduce(out);
}

Word boundary(const Presentation& p, const Sequence& s) { return product(p, s); }

bool is_identity_sequence(const Presentation& p, const Sequence& s) { return product(p, s).empty(); }

Sequence trivial_sequence(const Presentation& p, RelatorId r) {
    const auto rp = root_and_period(p.relator(r));
    return {ConjTerm{{}, r, 1}, ConjTerm{rp.root, r, -1}};
}

Sequence inverse_sequence(const Sequence& s) {
    Sequence out;
    out.reserve(s.size());
    for (auto it = s.rbegin(); it != s.rend(); ++it) out.push_back(it->inverse());
    return out;
}

Sequence conjugate_sequence(const Sequence& s, const Word& by) {
    Sequence out = s;
    for (auto& t : out) t.conjugator = concat(by, t.conjugator);
    return out;
}

Sequence juxtapose(const Sequence& a, const Sequence& b) {
    Sequence out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Sequence sub_normalize(const Sequence& s) {
    Sequence out = s;
    for (auto& t : out) t.conjugator = free_reduce(t.conjugator);
    return out;
}

namespace {

void check_pos(const Sequence& s, std::size_t pos, std::size_t width, const char* what) {
    if (pos + width > s.size())
        throw PreconditionViolated(std::string(what) + ": position " + std::to_string(pos) +
                                   " out of range for sequence of length " + std::to_string(s.size()));
}

void check_relator(const Presentation& p, const ConjTerm& t) {
    if (t.relator >= p.relator_count()) throw PreconditionViolated("INS: relator index out of range");
    if (t.exponent != 1 && t.exponent != -1) throw PreconditionViolated("INS: exponent must be +1 or -1");
}

}  // namespace

Sequence apply_peiffer(const Presentation& p, const Sequence& s, const PeifferOp& op) {
    Sequence out = s;
    if (const auto* sub = std::get_if<op::Sub>(&op)) {
        check_pos(s, sub->pos, 1, "SUB");
        if (!freely_equal(sub->conjugator, s[sub->pos].conjugator))
            throw PreconditionViolated("SUB: new conjugator is not freely equal to the old one");
        out[sub->pos].conjugator = sub->conjugator;
    } else if (const auto* del = std::get_if<op::Del>(&op)) {
        check_pos(s, del->pos, 2, "DEL");
        if (s[del->pos + 1] != s[del->pos].inverse())
            throw PreconditionViolated("DEL: terms are not identically inverse");
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(del->pos),
                  out.begin() + static_cast<std::ptrdiff_t>(del->pos + 2));
    } else if (const auto* ins = std::get_if<op::Ins>(&op)) {
        if (ins->pos > s.size()) throw PreconditionViolated("INS: position out of range");
        check_relator(p, ins->term);
        out.insert(out.begin() + static_cast<std::ptrdiff_t>(ins->pos), {ins->term, ins->term.inverse()});
    } else {
        const auto& ex = std::get<op::Ex>(op);
        check_pos(s, ex.pos, 2, "EX");
        const ConjTerm& c = s[ex.pos];
        const ConjTerm& d = s[ex.pos + 1];
        if (ex.direction == op::Direction::Left) {
            // (c, d) -> (d, d^-1 c d)
            ConjTerm moved{free_reduce(concat(inverse(term_word(p, d)), c.conjugator)), c.relator, c.exponent};
            out[ex.pos] = d;
            out[ex.pos + 1] = std::move(moved);
        } else {
            // (c, d) -> (c d c^-1, c)
            ConjTerm moved{free_reduce(concat(term_word(p, c), d.conjugator)), d.relator, d.exponent};
            out[ex.pos] = std::move(moved);
            out[ex.pos + 1] = c;
        }
    }
    return out;
}

PeifferOp inverse_op(const Presentation&, const Sequence& s, const PeifferOp& op) {
    if (const auto* sub = std::get_if<op::Sub>(&op)) return op::Sub{sub->pos, s.at(sub->pos).conjugator};
    if (const auto* del = std::get_if<op::Del>(&op)) return op::Ins{del->pos, s.at(del->pos)};
    if (const auto* ins = std::get_if<op::Ins>(&op)) return op::Del{ins->pos};
    const auto& ex = std::get<op::Ex>(op);
    return op::Ex{ex.pos, ex.direction == op::Direction::Left ? op::Direction::Right : op::Direction::Left};
}

Sequence peiffer_reduce(const Presentation& p, const Sequence& s) { return peiffer_reduce(p, s, nullptr); }

Sequence peiffer_reduce(const Presentation& p, const Sequence& s, std::vector<PeifferOp>* script) {
    Sequence cur = s;
    for (std::size_t k = 0; k < cur.size(); ++k) {
        Word reduced = free_reduce(cur[k].conjugator);
        if (reduced != cur[k].conjugator) {
            if (script) script->push_back(op::Sub{k, reduced});
            cur[k].conjugator = std::move(reduced);
        }
    }
    for (;;) {
        // nearest identically inverse pair, leftmost on ties
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t gap = 1; gap < cur.size() && !best; ++gap)
            for (std::size_t i = 0; i + gap < cur.size(); ++i)
                if (cur[i + gap] == cur[i].inverse()) {
                    best = {i, i + gap};
                    break;
                }
        if (!best) break;
        auto [i, j] = *best;
        for (std::size_t k = j; k > i + 1; --k) {
            PeifferOp ex = op::Ex{k - 1, op::Direction::Left};
            cur = apply_peiffer(p, cur, ex);
            if (script) script->push_back(ex);
        }
        cur = apply_peiffer(p, cur, op::Del{i});
        if (script) script->push_back(op::Del{i});
    }
    return cur;
}

std::string describe(const Presentation& p, const PeifferOp& op) {
    if (const auto* sub = std::get_if<op::Sub>(&op))
        return "SUB " + std::to_string(sub->pos) + " " + p.word_text(sub->conjugator);
    if (const auto* del = std::get_if<op::Del>(&op)) return "DEL " + std::to_string(del->pos);
    if (const auto* ins = std::get_if<op::Ins>(&op))
        return "INS " + std::to_string(ins->pos) + " " + p.word_text(ins->term.conjugator) + " " +
               std::to_string(ins->term.relator + 1) + (ins->term.exponent > 0 ? " +" : " -");
    const auto& ex = std::get<op::Ex>(op);
    return std::string("EX") + (ex.direction == op::Direction::Left ? "-left " : "-right ") + std::to_string(ex.pos);
}

Sequence parse_sequence(const Presentation& p, std::string_view text) {
    Sequence out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        std::string w, idx, sign;
        if (!(fields >> w)) continue;
        if (!(fields >> idx >> sign)) throw ParseError(line_no, 1, "expected '<W> <relator-index> <+|->'");
        ConjTerm t;
        try {
            t.conjugator = p.parse(w);
        } catch (const Error& e) {
            throw ParseError(line_no, 1, e.what());
        }
        std::size_t k = 0;
        for (char c : idx) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(line_no, 1, "bad relator index '" + idx + "'");
            k = k * 10 + static_cast<std::size_t>(c - '0');
        }
        if (k == 0 || k > p.relator_count()) throw ParseError(line_no, 1, "relator index out of range: " + idx);
        t.relator = k - 1;
        if (sign == "+" || sign == "+1") t.exponent = 1;
        else if (sign == "-" || sign == "-1") t.exponent = -1;
        else throw ParseError(line_no, 1, "exponent must be + or -");
        out.push_back(std::move(t));
    }
    return out;
}

std::string format_sequence(const Presentation& p, const Sequence& s) {
    std::string out;
    for (const auto& t : s)
        out += p.word_text(t.conjugator) + " " + std::to_string(t.relator + 1) + (t.exponent > 0 ? " +\n" : " -\n");
    return out;
}

}  // namespace peiffer
