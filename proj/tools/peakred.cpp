// peakred: command-line front end. Every verdict is printed as one document,
// either JSON (--json) or an indented key/value rendering of the same data.
// Exit codes: 0 definite answer, 2 unknown or needs-extension, 1 input error.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "peakred/random.hpp"
#include "peakred/serialize.hpp"

using namespace peakred;
using io::Json;
using io::to_json;

namespace {

constexpr int kDefinite = 0;
constexpr int kInputError = 1;
constexpr int kUnknown = 2;

struct Outcome {
    Json doc;
    int code = kDefinite;
};

Json head(const std::string& command, Json input) {
    Json j;
    j["command"] = command;
    j["input"] = std::move(input);
    return j;
}

// Status and certificate go right after the input; command-specific data follows.
Outcome finish(const Json& body, const std::string& status, Json certificate = nullptr) {
    Json doc;
    doc["command"] = body["command"];
    doc["input"] = body["input"];
    doc["status"] = status;
    if (!certificate.is_null()) doc["certificate"] = std::move(certificate);
    for (const auto& [k, v] : body.items())
        if (k != "command" && k != "input") doc[k] = v;
    int code = status == "unknown" || status == "needs-extension" ? kUnknown : kDefinite;
    return {std::move(doc), code};
}

// A witness that fails its own check is never printed as a positive answer.
Outcome unverified(Json doc, const std::string& what) {
    return finish(std::move(doc), "unknown", {{"rule", "witness-rejected"}, {"detail", what + " failed re-verification"}});
}

// --- commands --------------------------------------------------------------

Outcome cmd_canon(const std::string& text) {
    BiPoly p = parse_poly(text);
    Json doc = head("canon", to_json(p));
    auto o = canonical_model(p);
    const auto& trace = trace_of(o);
    if (apply(trace.word(), p) != reached(o)) return unverified(doc, "trace");
    if (auto* m = std::get_if<Model>(&o)) {
        doc["canonical"] = to_json(m->canonical);
        doc["degree"] = to_json(m->canonical.degree());
        doc["trace"] = to_json(m->trace);
        return finish(doc, "ok");
    }
    const auto& ne = std::get<NeedsExtension>(o);
    doc["trace"] = to_json(ne.trace);
    return finish(doc, "needs-extension", {{"rule", "irrational-shear"}, {"at", to_json(ne.at)}, {"minimal_poly", ne.minimal_poly.str("t")}});
}

Outcome cmd_equiv(const std::string& a, const std::string& b, const Budget& budget) {
    BiPoly p = parse_poly(a), q = parse_poly(b);
    Json doc = head("equiv", Json::array({to_json(p), to_json(q)}));
    doc["budget"] = {{"length", budget.length}, {"k", budget.k}, {"height", budget.height}};
    auto v = equivalent(p, q, budget);
    if (auto* w = std::get_if<EquivWitness>(&v)) {
        if (apply(w->phi, p) != q) return unverified(doc, "automorphism");
        return finish(doc, "equivalent", {{"rule", "witness"}, {"phi", to_json(w->phi)}});
    }
    if (auto* ne = std::get_if<NotEquivalent>(&v)) {
        Json cert{{"rule", ne->rule}};
        if (ne->thm11) {
            cert["p"] = to_json(ne->thm11->p);
            cert["q"] = to_json(ne->thm11->q);
        } else {
            cert["degree_p"] = ne->degree_p;
            cert["degree_q"] = ne->degree_q;
        }
        return finish(doc, "not-equivalent", cert);
    }
    return finish(doc, "unknown", {{"rule", "search-exhausted"}, {"detail", std::get<EquivUnknown>(v).reason}});
}

Json not_auto_cert(const NotAutomorphism& why) {
    return {{"rule", why.rule}, {"detail", why.detail}, {"stage", why.stage}};
}

Outcome cmd_is_auto(const std::string& text, bool want_word) {
    Auto phi = parse_auto(text);
    Json doc = head(want_word ? "factor" : "is-auto", to_json(phi));
    auto r = factor_jvdk(phi);
    if (auto* no = std::get_if<NotAutomorphism>(&r)) return finish(doc, "no", not_auto_cert(*no));
    const auto& f = std::get<JvdkFactorization>(r);
    if (f.word.evaluate() != phi) return unverified(doc, "factorization");
    if (want_word) {
        doc["word"] = to_json(f.word);
        return finish(doc, "ok");
    }
    return finish(doc, "yes", {{"rule", "jvdk"}, {"class", name(classify_shape(phi))}, {"word", to_json(f.word)}});
}

Outcome cmd_invert(const std::string& text) {
    Auto phi = parse_auto(text);
    Json doc = head("invert", to_json(phi));
    AutoWord w = factor_or_throw(phi);
    Auto inv = w.inverse().evaluate();
    if (compose(phi, inv) != Auto::identity()) return unverified(doc, "inverse");
    doc["inverse"] = to_json(inv);
    return finish(doc, "ok");
}

Outcome cmd_reduce_pair(const std::string& text) {
    PolyPair p = parse_pair(text);
    Json doc = head("reduce-pair", to_json(p));
    auto r = reduce_pair(p);
    if (apply_word(r.trace, p) != r.minimal) return unverified(doc, "trace");
    doc["minimal"] = to_json(r.minimal);
    doc["measure"] = to_json(measure(r.minimal));
    doc["trace"] = to_json(r.trace);
    return finish(doc, "ok");
}

Outcome cmd_pair_equiv(const std::string& a, const std::string& b) {
    PolyPair p = parse_pair(a), q = parse_pair(b);
    Json doc = head("pair-equiv", Json::array({to_json(p), to_json(q)}));
    auto v = pairs_equivalent(p, q);
    if (auto* w = std::get_if<PairWitness>(&v)) {
        if (!verify(*w, p, q)) return unverified(doc, "pair witness");
        return finish(doc, "equivalent",
                      {{"rule", "witness"},
                       {"first", to_json(w->first)},
                       {"second", to_json(w->second)},
                       {"alpha", to_json(w->alpha)},
                       {"beta", to_json(w->beta)},
                       {"link", to_json(w->link)}});
    }
    return finish(doc, "unknown", {{"rule", "no-link"}, {"detail", std::get<PairsUnknown>(v).reason}});
}

Outcome cmd_zl_screen(const std::string& text) {
    BiPoly p = parse_poly(text);
    Json doc = head("zl-screen", to_json(p));
    auto r = zl_screen(p);
    if (auto* out = std::get_if<RuledOut>(&r)) return finish(doc, "ruled-out", {{"rule", out->reason}, {"detail", out->detail}});
    if (auto* c = std::get_if<Candidates>(&r)) {
        Json pairs = Json::array();
        for (const auto& x : c->pairs) pairs.push_back(to_json(x));
        return finish(doc, "candidates", {{"rule", "newton-shape"}, {"pairs", pairs}});
    }
    const auto& d = std::get<DegenerateBranch>(r);
    return finish(doc, "unknown",
                  {{"rule", "degenerate-power"}, {"base", to_json(d.base)}, {"exponent", d.exponent}, {"scale", to_json(d.scale)}});
}

Outcome cmd_zl_decide(const std::string& text, const std::string& param) {
    BiPoly p = parse_poly(text);
    PolyPair par = parse_pair(param);
    Json doc = head("zl-decide", Json::array({to_json(p), to_json(par)}));
    auto d = zl_decide(p, {par.u, par.v});
    if (auto* e = std::get_if<EquivalentToStandard>(&d)) {
        BiPoly standard = BiPoly::monomial(1, e->k, 0) - BiPoly::monomial(1, 0, e->l);
        return finish(doc, "equivalent",
                      {{"rule", "monomial-minimal-pair"}, {"k", e->k}, {"l", e->l}, {"standard", to_json(standard)}});
    }
    return finish(doc, "unknown", {{"rule", "non-monomial"}, {"detail", std::get<ZLUnknown>(d).reason}});
}

Outcome cmd_coord(const std::string& text) {
    BiPoly p = parse_poly(text);
    Json doc = head("coord", to_json(p));
    auto v = is_coordinate(p);
    if (auto* y = std::get_if<CoordYes>(&v)) {
        if (apply(y->witness, BiPoly::x()) != p) return unverified(doc, "coordinate witness");
        return finish(doc, "yes", {{"rule", "witness"}, {"word", to_json(y->witness)}});
    }
    if (auto* n = std::get_if<CoordNo>(&v)) return finish(doc, "no", {{"rule", "canonical-degree"}, {"detail", n->reason}});
    return finish(doc, "unknown", {{"rule", "needs-extension"}, {"detail", std::get<CoordUnknown>(v).reason}});
}

Outcome cmd_normal_form(const std::string& text) {
    Auto phi = parse_auto(text);
    Json doc = head("normal-form", to_json(phi));
    auto f = normal_form(phi);
    if (f.evaluate() != phi) return unverified(doc, "normal form");
    Json form = to_json(f);
    for (const auto& [k, v] : form.items()) doc[k] = v;
    return finish(doc, "ok");
}

std::string read_source(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot read " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

Outcome cmd_e1e2(const std::string& path) {
    ShearWord w = parse_shear_word(read_source(path));
    Json letters = Json::array();
    for (const auto& l : w.letters) letters.push_back(std::string(name(l.kind)) + "(" + l.a.get_str() + ", " + std::to_string(l.k) + ")");
    Json doc = head("e1e2-nf", letters);
    auto f = e1e2_normal_form(w);
    doc["blocks"] = to_json(f);
    doc["identity"] = f.is_identity();
    return finish(doc, "ok");
}

Outcome cmd_random_word(std::uint64_t seed, const WordShape& shape) {
    std::mt19937_64 rng(seed);
    AutoWord w = random_word(rng, shape);
    Json doc = head("random-word", {{"seed", seed}, {"length", shape.max_length}, {"k", shape.max_k}, {"height", shape.height}});
    doc["word"] = to_json(w);
    doc["map"] = to_json(w.evaluate());
    return finish(doc, "ok");
}

// --- rendering -------------------------------------------------------------

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

// Scalars, and arrays of numbers (measures), fit on one line.
bool flat(const Json& j) {
    if (j.is_primitive()) return true;
    if (!j.is_array()) return false;
    for (const auto& e : j)
        if (!e.is_number()) return false;
    return true;
}

void render(std::ostream& out, const Json& j, int indent) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_primitive()) {
                out << pad << k << ": " << scalar(v) << "\n";
            } else if (v.empty()) {
                out << pad << k << ": (none)\n";
            } else if (flat(v)) {
                out << pad << k << ":";
                for (const auto& e : v) out << " " << scalar(e);
                out << "\n";
            } else {
                out << pad << k << ":\n";
                render(out, v, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (e.is_primitive() || flat(e)) {
                out << pad << "- ";
                if (e.is_primitive()) out << scalar(e);
                else for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << scalar(e[i]);
                out << "\n";
            } else {
                std::ostringstream inner;
                render(inner, e, indent + 2);
                std::string s = inner.str();
                s.replace(static_cast<std::size_t>(indent), 2, "- ");
                out << s;
            }
        }
    } else {
        out << pad << scalar(j) << "\n";
    }
}

void emit(const Json& doc, bool json) {
    if (json)
        std::cout << doc.dump(2) << "\n";
    else
        render(std::cout, doc, 0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Peak reduction for automorphisms and polynomials in Q[x, y]"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    std::uint64_t seed = 1;
    app.add_flag("--json", json, "emit one JSON document");
    app.add_option("--seed", seed, "seed for random-word");

    std::string a, b, param, path;
    Budget budget;
    WordShape shape;

    auto* canon = app.add_subcommand("canon", "canonical model of a polynomial");
    canon->add_option("poly", a)->required();
    auto* equiv = app.add_subcommand("equiv", "decide whether an automorphism takes one polynomial to another");
    equiv->add_option("p", a)->required();
    equiv->add_option("q", b)->required();
    equiv->add_option("--budget-len", budget.length, "generator blocks in the plateau search");
    equiv->add_option("--budget-k", budget.k, "largest shear exponent");
    equiv->add_option("--budget-height", budget.height, "coefficient height bound");
    auto* is_auto = app.add_subcommand("is-auto", "is \"f; g\" an automorphism");
    is_auto->add_option("map", a)->required();
    auto* factor = app.add_subcommand("factor", "generator word for an automorphism");
    factor->add_option("map", a)->required();
    auto* invert = app.add_subcommand("invert", "inverse automorphism");
    invert->add_option("map", a)->required();
    auto* rpair = app.add_subcommand("reduce-pair", "peak-reduce a pair \"u; v\" of polynomials in t");
    rpair->add_option("pair", a)->required();
    auto* pequiv = app.add_subcommand("pair-equiv", "ET-equivalence of two pairs");
    pequiv->add_option("p", a)->required();
    pequiv->add_option("q", b)->required();
    auto* zls = app.add_subcommand("zl-screen", "screen for equivalence to x^k - y^l");
    zls->add_option("poly", a)->required();
    auto* zld = app.add_subcommand("zl-decide", "decide x^k - y^l from a parametrization of the zero fiber");
    zld->add_option("poly", a)->required();
    zld->add_option("--param", param, "\"u; v\" with x = u(t), y = v(t)")->required();
    auto* coord = app.add_subcommand("coord", "is the polynomial a coordinate");
    coord->add_option("poly", a)->required();
    auto* nf = app.add_subcommand("normal-form", "alternating triangular normal form");
    nf->add_option("map", a)->required();
    auto* e1e2 = app.add_subcommand("e1e2-nf", "block normal form of an E1/E2 word file ('-' for stdin)");
    e1e2->add_option("file", path)->required();
    auto* rword = app.add_subcommand("random-word", "random tame automorphism from --seed");
    rword->add_option("--length", shape.max_length, "most generators in the word");
    rword->add_option("--k", shape.max_k, "largest shear degree");
    rword->add_option("--height", shape.height, "coefficient bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        Outcome o;
        if (canon->parsed()) o = cmd_canon(a);
        else if (equiv->parsed()) o = cmd_equiv(a, b, budget);
        else if (is_auto->parsed()) o = cmd_is_auto(a, false);
        else if (factor->parsed()) o = cmd_is_auto(a, true);
        else if (invert->parsed()) o = cmd_invert(a);
        else if (rpair->parsed()) o = cmd_reduce_pair(a);
        else if (pequiv->parsed()) o = cmd_pair_equiv(a, b);
        else if (zls->parsed()) o = cmd_zl_screen(a);
        else if (zld->parsed()) o = cmd_zl_decide(a, param);
        else if (coord->parsed()) o = cmd_coord(a);
        else if (nf->parsed()) o = cmd_normal_form(a);
        else if (e1e2->parsed()) o = cmd_e1e2(path);
        else o = cmd_random_word(seed, shape);
        emit(o.doc, json);
        return o.code;
    } catch (const std::exception& e) {
        Json err{{"command", command}, {"status", "error"}, {"error", e.what()}};
        if (const auto* fe = dynamic_cast<const FiberError*>(&e)) err["residual"] = fe->residual().str();
        if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
            err["line"] = pe->line();
            err["column"] = pe->column();
        }
        if (json)
            std::cout << err.dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
