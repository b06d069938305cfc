#ifndef PEAKRED_AMALGAM_HPP
#define PEAKRED_AMALGAM_HPP

// Alternating normal forms: blocks of E1/E2 shears, and the decomposition of
// an automorphism into upper and lower triangular factors around affine maps.

#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "peakred/automorph.hpp"

namespace peakred {

// ---------------------------------------------------------------------------
// E1/E2 words

enum class ShearKind { E1, E2 };

/// E1(a, k): (u, v) -> (u + a v^k, v); E2(a, k): (u, v) -> (u, v + a u^k).
struct ShearLetter {
    ShearKind kind = ShearKind::E1;
    Rational a = 1;
    int k = 2;
    friend bool operator==(const ShearLetter&, const ShearLetter&) = default;
};

struct ShearWord {
    std::vector<ShearLetter> letters;

    ShearWord inverse() const {
        ShearWord w;
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back({it->kind, -it->a, it->k});
        return w;
    }
};

inline const char* name(ShearKind k) { return k == ShearKind::E1 ? "E1" : "E2"; }

/// One letter per line or separated by whitespace/commas outside parentheses:
/// "E1(a, k)". Blank lines and text after '#' are ignored.
inline ShearWord parse_shear_word(std::string_view text) {
    ShearWord w;
    std::size_t pos = 0;
    int line = 1;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
    };
    while (pos < text.size()) {
        char c = text[pos];
        if (c == '\n') {
            ++line;
            ++pos;
        } else if (c == '#') {
            while (pos < text.size() && text[pos] != '\n') ++pos;
        } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            ++pos;
        } else {
            if (text.substr(pos, 2) != "E1" && text.substr(pos, 2) != "E2") fail("expected E1(a, k) or E2(a, k)");
            ShearKind kind = text[pos + 1] == '1' ? ShearKind::E1 : ShearKind::E2;
            pos += 2;
            std::size_t open = text.find('(', pos), close = text.find(')', pos);
            if (open != pos || close == std::string_view::npos) fail("expected '(' after " + std::string(name(kind)));
            std::string body(text.substr(open + 1, close - open - 1));
            auto comma = body.find(',');
            if (comma == std::string::npos) fail("expected two arguments");
            auto trim = [](std::string s) {
                s.erase(0, s.find_first_not_of(" \t"));
                s.erase(s.find_last_not_of(" \t") + 1);
                return s;
            };
            ShearLetter l{kind, 0, 0};
            try {
                l.a = parse_rational(trim(body.substr(0, comma)));
                l.k = std::stoi(trim(body.substr(comma + 1)));
            } catch (const std::exception&) {
                fail("bad arguments '" + body + "'");
            }
            if (sgn(l.a) == 0 || l.k < 2) fail("need a != 0 and k >= 2");
            w.letters.push_back(l);
            pos = close + 1;
        }
    }
    return w;
}

/// Exponent -> accumulated coefficient within one abelian block.
struct ShearBlock {
    ShearKind kind = ShearKind::E1;
    std::map<int, Rational> coeffs;
    friend bool operator==(const ShearBlock&, const ShearBlock&) = default;
};

struct BlockForm {
    std::vector<ShearBlock> blocks;
    bool is_identity() const { return blocks.empty(); }
    friend bool operator==(const BlockForm&, const BlockForm&) = default;
};

inline BlockForm e1e2_normal_form(const ShearWord& w) {
    BlockForm out;
    for (const auto& l : w.letters) {
        if (out.blocks.empty() || out.blocks.back().kind != l.kind) out.blocks.push_back({l.kind, {}});
        auto& b = out.blocks.back();
        Rational& c = b.coeffs[l.k];
        c += l.a;
        if (sgn(c) == 0) b.coeffs.erase(l.k);
        // An emptied block lets its neighbours meet; the next letter merges
        // into the exposed block if it has the same kind.
        if (b.coeffs.empty()) out.blocks.pop_back();
    }
    return out;
}

inline Auto to_auto(const ShearBlock& b) {
    BiPoly acc;
    const BiPoly& other = b.kind == ShearKind::E1 ? BiPoly::y() : BiPoly::x();
    for (const auto& [k, a] : b.coeffs) acc += a * other.pow(static_cast<unsigned>(k));
    return b.kind == ShearKind::E1 ? Auto{BiPoly::x() + acc, BiPoly::y()} : Auto{BiPoly::x(), BiPoly::y() + acc};
}

/// The pair obtained from (x, y) by applying the blocks in order.
inline Auto evaluate(const BlockForm& f) {
    Auto acc = Auto::identity();
    for (const auto& b : f.blocks) acc = compose(to_auto(b), acc);
    return acc;
}

inline Auto evaluate(const ShearWord& w) {
    Auto acc = Auto::identity();
    for (const auto& l : w.letters) acc = compose(to_auto(ShearBlock{l.kind, {{l.k, l.a}}}), acc);
    return acc;
}

// ---------------------------------------------------------------------------
// Triangular decomposition

/// Upper factors are (x + q(y), y), lower ones (x, y + q(x)).
struct AmalgamFactor {
    Side side = Side::X;
    Auto map;
};

/// phi = prefix, then factors in order, then head (first acts first).
struct AmalgamForm {
    Auto prefix = Auto::identity();
    Auto head = Auto::identity();
    std::vector<AmalgamFactor> factors;

    Auto evaluate() const {
        Auto acc = prefix;
        for (const auto& f : factors) acc = compose(acc, f.map);
        return compose(acc, head);
    }
};

inline const char* side_name(Side s) { return s == Side::X ? "TUT" : "TLT"; }

/// Peels the Jung-van der Kulk steps off phi. A first equal-degree step
/// reduces img_x and becomes the prefix; later ties reduce the same side as
/// the previous step so every factor stays non-affine.
inline AmalgamForm normal_form(const Auto& phi) {
    factor_or_throw(phi);
    AmalgamForm out;
    BiPoly u = phi.x_image, v = phi.y_image;
    std::optional<Side> last;
    while (u.deg() > 1 || v.deg() > 1) {
        auto step = jvdk_step(u, v, last.value_or(Side::X));
        if (!step) throw NotAutomorphismError(NotAutomorphism{"no-reduction", "normal_form: reduction stalled", 0});
        Auto g = to_auto(apply_step(*step, u, v));
        if (!last && step->d == 1) {
            out.prefix = compose(out.prefix, g);
        } else if (!out.factors.empty() && out.factors.back().side == step->which) {
            auto& f = out.factors.back().map;
            f = compose(f, g);
        } else {
            out.factors.push_back({step->which, g});
        }
        last = step->which;
    }
    out.head = Auto{u, v};
    return out;
}

}  // namespace peakred

#endif
