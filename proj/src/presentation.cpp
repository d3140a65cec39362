#include "peiffer/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace peiffer {

namespace {

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += "; ";
        out += s;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : Error("ValidationError: " + join(violations)), violations_(std::move(violations)) {}

Presentation::Presentation(Alphabet generators, std::vector<Word> relators,
                           std::vector<std::set<RelatorId>> families)
    : generators_(std::move(generators)), relators_(std::move(relators)), families_(std::move(families)) {}

Presentation Presentation::build(std::string_view generator_names,
                                 const std::vector<std::pair<std::size_t, std::string>>& relators) {
    std::string text = "gens:";
    for (char c : generator_names) {
        text += ' ';
        text += c;
    }
    text += '\n';
    for (const auto& [family, word] : relators) text += "rel " + std::to_string(family) + ": " + word + "\n";
    return parse_presentation(text);
}

const std::set<RelatorId>& Presentation::family(FamilyIndex i) const {
    check_family(i);
    return families_[i.value - 1];
}

void Presentation::check_family(FamilyIndex i) const {
    if (i.value < 1 || i.value > families_.size())
        throw Error("family index " + std::to_string(i.value) + " out of range 1.." +
                    std::to_string(families_.size()));
}

std::set<RelatorId> Presentation::complement_relators(FamilyIndex i) const {
    check_family(i);
    std::set<RelatorId> out;
    for (std::size_t j = 0; j < families_.size(); ++j)
        if (j + 1 != i.value) out.insert(families_[j].begin(), families_[j].end());
    return out;
}

std::vector<std::string> validate_rh(const Presentation& p) {
    std::vector<std::string> violations;
    std::vector<std::optional<CyclicWord>> canon(p.relator_count());
    for (RelatorId r = 0; r < p.relator_count(); ++r) {
        const Word& w = p.relator(r);
        const std::string name = "relator #" + std::to_string(r + 1) + " (" + p.word_text(w) + ")";
        if (freely_trivial(w)) {
            violations.push_back(name + " is freely trivial");
            continue;
        }
        if (!is_cyclically_reduced(w)) {
            violations.push_back(name + " is not cyclically reduced");
            continue;
        }
        canon[r].emplace(w);
    }
    for (RelatorId r = 0; r < p.relator_count(); ++r) {
        if (!canon[r]) continue;
        const CyclicWord inv = canon[r]->inverse();
        for (RelatorId s = 0; s < r; ++s) {
            if (!canon[s]) continue;
            if (*canon[s] == *canon[r])
                violations.push_back("relator #" + std::to_string(r + 1) + " is conjugate to relator #" +
                                     std::to_string(s + 1));
            else if (*canon[s] == inv)
                violations.push_back("relator #" + std::to_string(r + 1) +
                                     " is conjugate to the inverse of relator #" + std::to_string(s + 1));
        }
        if (*canon[r] == inv) violations.push_back("relator #" + std::to_string(r + 1) + " is conjugate to its own inverse");
    }
    for (RelatorId r = 0; r < p.relator_count(); ++r) {
        bool covered = false;
        for (const auto& f : p.families()) covered = covered || f.contains(r);
        if (!covered) violations.push_back("relator #" + std::to_string(r + 1) + " belongs to no family");
    }
    if (p.family_count() == 0) violations.push_back("presentation has no relator families");
    return violations;
}

std::set<RelatorId> shared_relators(const Presentation& p, FamilyIndex i) {
    std::set<RelatorId> out;
    const auto others = p.complement_relators(i);
    for (RelatorId r : p.family(i))
        if (others.contains(r)) out.insert(r);
    return out;
}

bool families_disjoint(const Presentation& p) {
    for (std::size_t i = 0; i < p.family_count(); ++i)
        for (std::size_t j = i + 1; j < p.family_count(); ++j)
            for (RelatorId r : p.families()[i])
                if (p.families()[j].contains(r)) return false;
    return true;
}

Presentation parse_presentation(std::string_view text) {
    std::optional<Alphabet> alphabet;
    std::vector<Word> relators;
    std::map<std::size_t, std::set<RelatorId>> by_family;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view raw = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        const std::string_view line = trim(raw);
        if (line.empty()) continue;
        const std::size_t col0 = static_cast<std::size_t>(line.data() - raw.data()) + 1;
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) throw ParseError(line_no, col0, "expected 'gens:' or 'rel <k>:'");
        const std::string_view key = trim(line.substr(0, colon));
        const std::string_view body = trim(line.substr(colon + 1));
        if (key == "gens") {
            if (alphabet) throw ParseError(line_no, col0, "duplicate gens line");
            std::vector<char> names;
            std::istringstream in{std::string(body)};
            std::string tok;
            while (in >> tok) {
                if (tok.size() != 1 || !std::islower(static_cast<unsigned char>(tok[0])))
                    throw ParseError(line_no, col0, "generator names must be single lowercase letters: '" + tok + "'");
                if (std::find(names.begin(), names.end(), tok[0]) != names.end())
                    throw ParseError(line_no, col0, "duplicate generator '" + tok + "'");
                names.push_back(tok[0]);
            }
            if (names.empty()) throw ParseError(line_no, col0, "no generators");
            alphabet = Alphabet(std::move(names));
            continue;
        }
        if (key.substr(0, 3) != "rel") throw ParseError(line_no, col0, "unknown directive '" + std::string(key) + "'");
        if (!alphabet) throw ParseError(line_no, col0, "'rel' before 'gens'");
        const std::string_view num = trim(key.substr(3));
        std::size_t family = 0;
        for (char c : num) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(line_no, col0, "bad family index");
            family = family * 10 + static_cast<std::size_t>(c - '0');
        }
        if (num.empty() || family == 0) throw ParseError(line_no, col0, "family index must be a positive integer");
        const std::size_t word_col = static_cast<std::size_t>(body.data() - raw.data()) + 1;
        Word w;
        try {
            w = parse_word(body, *alphabet);
        } catch (const Error& e) {
            throw ParseError(line_no, word_col, e.what());
        }
        if (w.empty() || freely_trivial(w)) throw ParseError(line_no, word_col, "relator is freely trivial");
        if (!is_cyclically_reduced(w)) throw ParseError(line_no, word_col, "relator is not cyclically reduced");
        auto it = std::find(relators.begin(), relators.end(), w);
        RelatorId id = static_cast<RelatorId>(it - relators.begin());
        if (it == relators.end()) relators.push_back(w);
        by_family[family].insert(id);
    }
    if (!alphabet) throw ParseError(line_no, 1, "missing 'gens:' line");
    std::vector<std::set<RelatorId>> families;
    if (!by_family.empty()) {
        const std::size_t n = by_family.rbegin()->first;
        families.resize(n);
        for (auto& [k, ids] : by_family) families[k - 1] = std::move(ids);
        for (std::size_t k = 0; k < n; ++k)
            if (families[k].empty()) throw ParseError(line_no, 1, "family " + std::to_string(k + 1) + " is empty");
    }
    Presentation p(std::move(*alphabet), std::move(relators), std::move(families));
    if (auto v = validate_rh(p); !v.empty()) throw ValidationError(std::move(v));
    return p;
}

std::string format_presentation(const Presentation& p) {
    std::string out = "gens:";
    for (char c : p.alphabet().names()) {
        out += ' ';
        out += c;
    }
    out += '\n';
    for (RelatorId r = 0; r < p.relator_count(); ++r)
        for (std::size_t f = 0; f < p.family_count(); ++f)
            if (p.families()[f].contains(r))
                out += "rel " + std::to_string(f + 1) + ": " + p.word_text(p.relator(r)) + "\n";
    return out;
}

}  // namespace peiffer
