// Command-line driver. Exit codes: 0 ok, 1 validation failure, 2 Unknown, 3 I/O error.
#include "peiffer/equator.hpp"
#include "peiffer/eta.hpp"
#include "peiffer/render.hpp"
#include "peiffer/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace peiffer;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct IoError : Error {
    using Error::Error;
};

constexpr int kOk = 0, kInvalid = 1, kUnknown = 2, kIo = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << text;
}

struct Config {
    std::size_t family = 1;
    int depth = 8;
    std::size_t frontier = 100000;
    std::size_t coset_bound = 16;
    std::size_t budget = 0;  // 0: per-command default
    std::string lib;
    std::string format = "text";
    std::uint64_t seed = 0;
    std::string presentation;
    std::string output;
    std::string word;
    std::string op;
    bool trivial = false;
    std::vector<std::string> files;
};

Presentation load_presentation(const std::string& path) {
    Presentation p = parse_presentation(slurp(path));
    if (const auto v = validate_rh(p); !v.empty()) throw ValidationError(v);
    return p;
}

// A picture file names its presentation relative to itself unless --presentation is given.
std::string presentation_for_picture(const Config& c, const std::string& pic_path, const std::string& text) {
    if (!c.presentation.empty()) return c.presentation;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(1, 1, e.what());
    }
    if (!j.contains("presentation") || !j["presentation"].is_string())
        throw Error(pic_path + ": no presentation reference; pass --presentation");
    fs::path ref = j["presentation"].get<std::string>();
    if (ref.is_relative()) ref = fs::path(pic_path).parent_path() / ref;
    return ref.string();
}

struct Loaded {
    Presentation pres;
    std::string pres_path;
    std::string text;
};

Loaded load_picture_file(const Config& c, const std::string& path) {
    std::string text = slurp(path);
    std::string pp = presentation_for_picture(c, path, text);
    return Loaded{load_presentation(pp), pp, std::move(text)};
}

// Presentation path as seen from where the picture is written.
std::string pres_ref(const std::string& pres_path, const std::string& output) {
    const fs::path base = output.empty() ? fs::current_path() : fs::absolute(output).parent_path();
    return fs::proximate(fs::absolute(pres_path), base).generic_string();
}

std::string picture_json(const Picture& p, const std::string& pres_ref) {
    json j = json::parse(to_json(p));
    if (!pres_ref.empty()) j["presentation"] = pres_ref;
    return j.dump(2) + "\n";
}

PeifferOp parse_op(const Presentation& p, const std::string& text) {
    std::istringstream in(text);
    std::string kind;
    std::size_t pos = 0;
    if (!(in >> kind >> pos)) throw ParseError(1, 1, "expected '<OP> <pos> ...'");
    if (kind == "SUB") {
        std::string w;
        in >> w;
        return op::Sub{pos, p.parse(w == "1" ? "" : w)};
    }
    if (kind == "DEL") return op::Del{pos};
    if (kind == "INS") {
        std::string w, sign;
        RelatorId r = 0;
        if (!(in >> w >> r >> sign) || r == 0) throw ParseError(1, 1, "INS expects '<pos> <W> <relator> <+|->'");
        return op::Ins{pos, ConjTerm{p.parse(w == "1" ? "" : w), r - 1, sign == "-" ? -1 : 1}};
    }
    if (kind == "EX-left") return op::Ex{pos, op::Direction::Left};
    if (kind == "EX-right") return op::Ex{pos, op::Direction::Right};
    throw ParseError(1, 1, "unknown operation " + kind);
}

void need(const Config& c, std::size_t n, const std::string& usage) {
    if (c.files.size() < n) throw CLI::ValidationError("usage: " + usage);
}

PictureLibrary load_library(const Presentation& pres, const Config& c) {
    PictureLibrary lib(pres);
    if (c.lib.empty()) return lib;
    if (c.lib == "primdipoles") {
        lib.add_primitive_dipoles();
        return lib;
    }
    if (!fs::is_directory(c.lib)) throw IoError("library directory " + c.lib + " not found");
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(c.lib))
        if (e.path().extension() == ".pic") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) lib.add(f.stem().string(), picture_from_json(pres, slurp(f.string())));
    return lib;
}

std::optional<YLibrary> load_y_library(const Presentation& pres, const Config& c) {
    if (c.lib.empty()) return std::nullopt;
    if (!fs::is_directory(c.lib)) throw IoError("Y-picture directory " + c.lib + " not found");
    YLibrary y(pres, FamilyIndex{c.family});
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(c.lib))
        if (e.path().extension() == ".pic") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) y.add(f.stem().string(), picture_from_json(pres, slurp(f.string())));
    return y;
}

int cmd_validate(const Config& c) {
    need(c, 1, "validate <presentation>");
    const Presentation p = parse_presentation(slurp(c.files[0]));
    const auto v = validate_rh(p);
    if (c.format == "json") {
        std::cout << json{{"ok", v.empty()}, {"violations", v}}.dump(2) << "\n";
    } else if (v.empty()) {
        std::cout << "ok\n";
    } else {
        for (const auto& s : v) std::cout << s << "\n";
    }
    return v.empty() ? kOk : kInvalid;
}

int cmd_seq(const std::string& what, const Config& c) {
    need(c, 2, "seq " + what + " <presentation> <sequence> [<sequence>]");
    const Presentation p = load_presentation(c.files[0]);
    const Sequence s = parse_sequence(p, slurp(c.files[1]));
    const bool js = c.format == "json";
    if (what == "product") {
        const Word w = free_reduce(product(p, s));
        std::cout << (js ? json{{"product", p.word_text(w)}}.dump(2) : p.word_text(w)) << "\n";
        return kOk;
    }
    if (what == "check") {
        const bool ok = is_identity_sequence(p, s);
        std::cout << (js ? json{{"identity", ok}}.dump(2) : ok ? std::string("identity sequence")
                                                               : "not an identity sequence: product " +
                                                                     p.word_text(free_reduce(product(p, s))))
                  << "\n";
        return ok ? kOk : kInvalid;
    }
    if (what == "reduce") {
        std::vector<PeifferOp> script;
        const Sequence r = peiffer_reduce(p, s, &script);
        if (js) {
            json steps = json::array();
            for (const auto& o : script) steps.push_back(describe(p, o));
            std::cout << json{{"sequence", format_sequence(p, r)}, {"script", steps}}.dump(2) << "\n";
        } else {
            for (const auto& o : script) std::cout << "# " << describe(p, o) << "\n";
            std::cout << format_sequence(p, r);
        }
        return kOk;
    }
    if (what == "eta") {
        const FamilyIndex fam{c.family};
        if (c.op.empty()) {
            const Word v = eta_image(p, s, fam);
            std::cout << (js ? json{{"eta", p.word_text(v)}}.dump(2) : p.word_text(v)) << "\n";
            return kOk;
        }
        const EtaCertificate cert = eta_certificate(p, s, parse_op(p, c.op), fam);
        json fs_ = json::array();
        for (const auto& f : cert.factors)
            if (const auto* cf = std::get_if<CommutatorFactor>(&f)) fs_.push_back(p.word_text(expand(p, *cf)));
        const bool ok = cert.verify(p);
        if (js)
            std::cout << json{{"old", p.word_text(cert.old_V)}, {"new", p.word_text(cert.new_V)}, {"factors", fs_}, {"verified", ok}}
                             .dump(2)
                      << "\n";
        else {
            std::cout << "old " << p.word_text(cert.old_V) << "\nnew " << p.word_text(cert.new_V) << "\n";
            for (const auto& f : fs_) std::cout << "factor " << f.get<std::string>() << "\n";
            std::cout << (ok ? "verified" : "NOT verified") << "\n";
        }
        return ok ? kOk : kInvalid;
    }
    // equiv
    need(c, 3, "seq equiv <presentation> <sequence> <sequence>");
    const Sequence b = parse_sequence(p, slurp(c.files[2]));
    SearchBudget budget;
    budget.max_depth = c.depth;
    budget.max_frontier = c.frontier;
    budget.allow_trivial = c.trivial;
    const auto r = peiffer_equivalent_bounded(p, s, b, budget);
    static const char* names[] = {"equivalent", "not equivalent", "unknown"};
    const char* name = names[static_cast<int>(r.status)];
    if (js) {
        json steps = json::array();
        for (const auto& m : r.script) steps.push_back(describe(p, m));
        std::cout << json{{"status", name}, {"script", steps}, {"states", r.states_explored}}.dump(2) << "\n";
    } else {
        std::cout << name << " (" << r.states_explored << " states)\n";
        for (const auto& m : r.script) std::cout << "  " << describe(p, m) << "\n";
    }
    return r.status == EquivalenceResult::Status::Equivalent      ? kOk
           : r.status == EquivalenceResult::Status::NotEquivalent ? kInvalid
                                                                  : kUnknown;
}

int cmd_pic(const std::string& what, const Config& c) {
    if (what == "build") {
        need(c, 2, "pic build <presentation> <sequence>");
        const Presentation p = load_presentation(c.files[0]);
        const Sequence s = parse_sequence(p, slurp(c.files[1]));
        // identity sequences give spherical pictures
        const Picture pic = is_identity_sequence(p, s) ? close_to_sphere(from_sequence(p, s)) : from_sequence(p, s);
        const std::string out = picture_json(pic, pres_ref(c.files[0], c.output));
        if (!c.output.empty())
            spill(c.output, out);
        else
            std::cout << out;
        return kOk;
    }
    need(c, 1, "pic " + what + " <picture>");
    const Loaded l = load_picture_file(c, c.files[0]);
    const Picture pic = picture_from_json(l.pres, l.text);
    if (what == "check") {
        const auto v = validate(pic);
        const auto e = euler_counts(pic);
        if (c.format == "json") {
            std::cout << json{{"ok", v.empty()},
                              {"violations", v},
                              {"spherical", is_spherical(pic)},
                              {"boundary", l.pres.word_text(boundary_label(pic))},
                              {"V", e.v},
                              {"E", e.e},
                              {"F", e.f}}
                             .dump(2)
                      << "\n";
        } else {
            for (const auto& s : v) std::cout << s << "\n";
            std::cout << (v.empty() ? "ok" : "invalid") << "; V-E+F = " << e.v << "-" << e.e << "+" << e.f << " = "
                      << e.characteristic() << "; boundary " << l.pres.word_text(boundary_label(pic))
                      << (is_spherical(pic) ? "; spherical" : "") << "\n";
        }
        return v.empty() ? kOk : kInvalid;
    }
    if (what == "render") {
        const std::string out = c.format == "dot" ? render_dot(pic) : render_svg(pic);
        if (!c.output.empty())
            spill(c.output, out);
        else
            std::cout << out;
        return kOk;
    }
    // spray
    const Spray s = find_spray(pic, c.seed);
    const Sequence seq = sequence_from_spray(pic, s);
    if (c.format == "json") {
        json paths = json::array();
        for (const auto& w : s.paths) paths.push_back(l.pres.word_text(w));
        std::cout << json{{"order", s.order}, {"paths", paths}, {"sequence", format_sequence(l.pres, seq)}}.dump(2) << "\n";
    } else {
        std::cout << format_sequence(l.pres, seq);
    }
    return kOk;
}

int cmd_moves(const std::string& what, const Config& c) {
    need(c, 1, "moves " + what + " <picture> ...");
    const Loaded l = load_picture_file(c, c.files[0]);
    const Picture pic = picture_from_json(l.pres, l.text);
    if (what == "dipoles") {
        static const char* kinds[] = {"dipole", "complete", "primitive"};
        json arr = json::array();
        for (const auto& d : detect_dipoles(pic))
            arr.push_back({{"arc", d.arc}, {"u", d.u}, {"v", d.v}, {"kind", kinds[static_cast<int>(d.kind)]}, {"f", d.f},
                           {"basepoints_share_region", d.basepoints_share_region}});
        if (c.format == "json")
            std::cout << arr.dump(2) << "\n";
        else
            for (const auto& d : arr)
                std::cout << d["kind"].get<std::string>() << " " << d["u"] << "-" << d["v"] << " via dart " << d["arc"]
                          << " f=" << d["f"] << (d["basepoints_share_region"].get<bool>() ? " shared-region" : "") << "\n";
        return kOk;
    }
    const PictureLibrary lib = load_library(l.pres, c);
    if (what == "apply") {
        need(c, 2, "moves apply <picture> <script>");
        const MoveScript s = script_from_json(slurp(c.files[1]));
        const Word before = boundary_label(pic);
        const Picture out = replay(pic, s, &lib, [&](std::size_t k, const Picture& cur) {
            if (euler_counts(cur).characteristic() != 2 || !freely_equal(boundary_label(cur), before))
                throw PreconditionViolated("step " + std::to_string(k + 1) + " breaks the picture invariants");
        });
        const std::string text = picture_json(out, pres_ref(l.pres_path, c.output));
        if (!c.output.empty())
            spill(c.output, text);
        else
            std::cout << text;
        return kOk;
    }
    // search
    MoveBudget budget;
    if (c.budget) budget.max_states = c.budget;
    budget.parallel = false;
    const auto r = search_to_empty(pic, lib, budget);
    if (!r.found) {
        std::cerr << "no reduction to the empty picture within " << r.states_explored << " states\n";
        return kUnknown;
    }
    const std::string text = script_to_json(r.script) + "\n";
    if (!c.output.empty()) spill(c.output, text);
    if (c.format == "json")
        std::cout << text;
    else
        for (const auto& m : r.script) std::cout << describe(m) << "\n";
    return kOk;
}

std::string factor_text(const Presentation& p, const FactorizationCertificate& cert) {
    std::ostringstream o;
    o << p.word_text(cert.target) << " =";
    if (cert.factors.empty()) o << " 1";
    for (std::size_t k = 0; k < cert.factors.size(); ++k)
        o << (k ? "\n    * " : " ") << describe(p, cert.factors[k]);
    o << "\n";
    return o.str();
}

int cmd_factor(const Config& c) {
    need(c, 1, "factor --family i --word U <presentation>");
    const Presentation p = load_presentation(c.presentation.empty() ? c.files[0] : c.presentation);
    const auto y = load_y_library(p, c);
    FactorizeBudget budget;
    if (c.budget) budget.max_steps = c.budget;
    const FamilyIndex fam{c.family};
    const auto r = factorize(p, p.parse(c.word == "1" ? "" : c.word), fam, y ? &*y : nullptr, budget);
    if (r.status == FactorizeResult::Status::PreconditionFailed) {
        std::cerr << "precondition failed: " << r.message << "\n";
        if (c.format == "json") std::cout << json{{"status", "precondition_failed"}, {"witness", r.message}}.dump(2) << "\n";
        return kInvalid;
    }
    if (r.status == FactorizeResult::Status::Unknown) {
        std::cerr << "unknown: " << r.message << "\n";
        if (c.format == "json") std::cout << json{{"status", "unknown"}, {"reason", r.message}}.dump(2) << "\n";
        return kUnknown;
    }
    if (c.format == "svg" && r.glued) {
        std::cout << render_svg(*r.glued);
        return kOk;
    }
    const std::string js = certificate_to_json(p, r.certificate) + "\n";
    if (!c.output.empty()) spill(c.output, js);
    std::cout << (c.format == "json" ? js : factor_text(p, r.certificate));
    return kOk;
}

int cmd_generators(const Config& c) {
    need(c, 1, "generators --family i <presentation>");
    const Presentation p = load_presentation(c.presentation.empty() ? c.files[0] : c.presentation);
    const auto y = load_y_library(p, c);
    const auto g = generator_list(p, FamilyIndex{c.family}, y ? &*y : nullptr, c.coset_bound);
    if (c.format == "json") {
        json cos = json::array(), gens = json::array();
        for (const auto& w : g.cosets) cos.push_back(p.word_text(w));
        for (const auto& d : g.generators) {
            json j{{"conjugator", p.word_text(d.conjugator)}, {"word", p.word_text(d.word)}};
            if (d.kind == GeneratorDescriptor::Kind::SharedRelator) {
                j["kind"] = "shared_relator";
                j["relator"] = d.relator + 1;
            } else {
                j["kind"] = "y_picture";
                j["entry"] = d.entry;
            }
            gens.push_back(j);
        }
        std::cout << json{{"cosets", cos}, {"generators", gens}, {"complete", g.complete}, {"approximate", g.approximate}}.dump(2)
                  << "\n";
    } else {
        std::cout << "# " << g.cosets.size() << " cosets" << (g.complete ? ", complete" : ", bound reached")
                  << (g.approximate ? ", approximate" : "") << "\n";
        for (const auto& d : g.generators)
            std::cout << p.word_text(d.word) << "\t"
                      << (d.kind == GeneratorDescriptor::Kind::SharedRelator ? "relator " + std::to_string(d.relator + 1)
                                                                             : "Y " + std::to_string(d.entry))
                      << " conjugated by " << p.word_text(d.conjugator) << "\n";
    }
    return g.approximate ? kUnknown : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Peiffer sequences, pictures and equator factorization"};
    app.require_subcommand(1);
    Config c;
    auto common = [&](CLI::App* s) {
        s->add_option("files", c.files, "input files");
        s->add_option("--family", c.family, "family index i")->check(CLI::PositiveNumber);
        s->add_option("--budget-depth", c.depth, "search depth")->check(CLI::PositiveNumber);
        s->add_option("--budget-frontier", c.frontier, "search frontier")->check(CLI::PositiveNumber);
        s->add_option("--coset-bound", c.coset_bound, "coset enumeration bound")->check(CLI::PositiveNumber);
        s->add_option("--budget", c.budget, "step or state budget")->check(CLI::PositiveNumber);
        s->add_option("--lib", c.lib, "library: 'primdipoles' or a directory of .pic files");
        s->add_option("--format", c.format, "text, json, svg or dot")
            ->check(CLI::IsMember({"text", "json", "svg", "dot"}));
        s->add_option("--seed", c.seed, "seed for pseudo-random sprays");
        s->add_option("--presentation", c.presentation, "presentation file");
        s->add_option("-o,--output", c.output, "output file");
    };
    std::string action;
    auto* validate_cmd = app.add_subcommand("validate", "check a presentation");
    common(validate_cmd);
    auto* seq = app.add_subcommand("seq", "identity sequences");
    seq->add_option("action", action)->required()->check(CLI::IsMember({"product", "check", "reduce", "eta", "equiv"}));
    seq->add_option("--op", c.op, "operation for eta, e.g. 'EX-left 0'");
    seq->add_flag("--trivial", c.trivial, "equiv: allow trivial-pair moves");
    common(seq);
    auto* pic = app.add_subcommand("pic", "pictures");
    pic->add_option("action", action)->required()->check(CLI::IsMember({"build", "check", "render", "spray"}));
    common(pic);
    auto* moves = app.add_subcommand("moves", "picture moves");
    moves->add_option("action", action)->required()->check(CLI::IsMember({"apply", "search", "dipoles"}));
    common(moves);
    auto* factor = app.add_subcommand("factor", "factorize U in R_i and N_i");
    factor->add_option("--word", c.word, "U")->required();
    common(factor);
    auto* gens = app.add_subcommand("generators", "generators of the intersection modulo the commutator");
    common(gens);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kInvalid;
    }
    try {
        if (*validate_cmd) return cmd_validate(c);
        if (*seq) return cmd_seq(action, c);
        if (*pic) return cmd_pic(action, c);
        if (*moves) return cmd_moves(action, c);
        if (*factor) return cmd_factor(c);
        return cmd_generators(c);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kInvalid;
    } catch (const ValidationError& e) {
        std::cerr << "invalid presentation:\n";
        for (const auto& v : e.violations()) std::cerr << "  " << v << "\n";
        return kInvalid;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
}
