#ifndef PEAKRED_SERIALIZE_HPP
#define PEAKRED_SERIALIZE_HPP

// JSON views of the library's values. Polynomials and maps are written in the
// same text grammar the parsers accept, so they can be fed back verbatim.

#include "json.hpp"
#include "peakred/amalgam.hpp"
#include "peakred/canon.hpp"
#include "peakred/pairs.hpp"
#include "peakred/zl.hpp"

namespace peakred::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return r.get_str(); }
inline Json to_json(const BiPoly& p) { return p.str(); }
inline Json to_json(const UniPoly& p) { return p.str(); }
inline Json to_json(const Degree& d) { return d.is_finite() ? Json(d.value()) : Json("-inf"); }
inline Json to_json(const Auto& a) { return a.x_image.str() + "; " + a.y_image.str(); }
inline Json to_json(const PolyPair& p) { return p.str(); }
inline Json to_json(const Measure& m) { return Json::array({m.maxdeg, m.count}); }

inline Json to_json(const Linear& l) {
    return {{"type", "linear"}, {"a1", to_json(l.a1)}, {"a2", to_json(l.a2)}, {"b1", to_json(l.b1)}, {"b2", to_json(l.b2)}};
}

inline Json to_json(const Generator& g) {
    return std::visit(
        [](const auto& v) -> Json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Linear>) {
                return to_json(v);
            } else if constexpr (std::is_same_v<T, AffineShift>) {
                return {{"type", "shift"}, {"c1", to_json(v.c1)}, {"c2", to_json(v.c2)}};
            } else if constexpr (std::is_same_v<T, TriangularX>) {
                return {{"type", "triangular-x"}, {"a", to_json(v.a)}, {"f", v.f.str("y")}};
            } else {
                return {{"type", "triangular-y"}, {"b", to_json(v.b)}, {"f", v.f.str("x")}};
            }
        },
        g);
}

inline Json to_json(const AutoWord& w) {
    Json out = Json::array();
    for (const auto& g : w.factors) out.push_back(to_json(g));
    return out;
}

inline Json to_json(const ETMove& m) {
    return std::visit(
        [](const auto& e) -> Json {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, ET1>) return {{"move", "ET1"}, {"mu", to_json(e.mu)}, {"k", e.k}};
            else if constexpr (std::is_same_v<T, ET2>) return {{"move", "ET2"}, {"mu", to_json(e.mu)}, {"k", e.k}};
            else
                return {{"move", "ET3"}, {"a1", to_json(e.a1)}, {"a2", to_json(e.a2)}, {"b1", to_json(e.b1)}, {"b2", to_json(e.b2)}};
        },
        m);
}

inline Json to_json(const ETWord& w) {
    Json out = Json::array();
    for (std::size_t i = 0; i < w.moves.size(); ++i) {
        Json j = to_json(w.moves[i]);
        if (i < w.measures.size()) j["measure"] = to_json(w.measures[i]);
        out.push_back(j);
    }
    return out;
}

inline const char* side_str(Side s) { return s == Side::X ? "x" : "y"; }

inline Json to_json(const ShearStep& s) {
    return {{"pre_linear", to_json(s.pre_linear)}, {"shear", side_str(s.orientation)}, {"k", s.k}, {"lambda", to_json(s.lambda)}};
}

inline Json to_json(const ReductionTrace& t) {
    Json steps = Json::array();
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        Json j = to_json(t.steps[i]);
        j["degree"] = to_json(t.degrees[i + 1]);
        steps.push_back(j);
    }
    return steps;
}

inline Json to_json(const NewtonData& nd) {
    Json mixed = Json::array();
    for (const auto& [m, c] : nd.mixed) mixed.push_back({{"i", m.i}, {"j", m.j}, {"c", to_json(c)}});
    return {{"n", nd.n}, {"m", nd.m}, {"a", to_json(nd.a)}, {"b", to_json(nd.b)}, {"mixed", mixed}};
}

inline Json to_json(const ShearBlock& b) {
    Json coeffs = Json::object();
    for (const auto& [k, a] : b.coeffs) coeffs[std::to_string(k)] = to_json(a);
    return {{"kind", name(b.kind)}, {"coeffs", coeffs}};
}

inline Json to_json(const BlockForm& f) {
    Json out = Json::array();
    for (const auto& b : f.blocks) out.push_back(to_json(b));
    return out;
}

inline Json to_json(const AmalgamForm& f) {
    Json factors = Json::array();
    for (const auto& x : f.factors) factors.push_back({{"side", side_name(x.side)}, {"map", to_json(x.map)}});
    return {{"prefix", to_json(f.prefix)}, {"head", to_json(f.head)}, {"factors", factors}};
}

inline Json to_json(const ZLCandidate& c) { return {{"k", c.k}, {"l", c.l}, {"k_on", side_str(c.k_on)}}; }

}  // namespace peakred::io

#endif
