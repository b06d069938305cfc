#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "peakred/random.hpp"
#include "peakred/zl.hpp"

namespace peakred {
namespace {

BiPoly P(const char* s) { return parse_poly(s); }
UniPoly U(const char* s) { return parse_unipoly(s); }

TEST(ZLScreen, Examples) {
    auto r = zl_screen(P("x^2 - y^3"));
    ASSERT_TRUE(std::holds_alternative<Candidates>(r));
    const auto& c = std::get<Candidates>(r);
    ASSERT_EQ(c.pairs.size(), 1u);
    EXPECT_EQ(c.pairs[0], (ZLCandidate{3, 2, Side::Y}));

    r = zl_screen(P("x^2 - y^4"));
    ASSERT_TRUE(std::holds_alternative<RuledOut>(r));
    EXPECT_EQ(std::get<RuledOut>(r).reason, "degenerate-branch");

    EXPECT_EQ(std::get<RuledOut>(zl_screen(P("x^2*y + x"))).reason, "shape");
    EXPECT_EQ(std::get<RuledOut>(zl_screen(P("x^4 - y^6"))).reason, "coprime");
    EXPECT_THROW(zl_screen(P("3")), std::invalid_argument);
}

TEST(ZLScreen, DivisibleBranch) {
    // (x - y^2)^2 + x: leading part is a square, and no coordinate.
    auto r = zl_screen(P("(x - y^2)^2 + x"));
    ASSERT_TRUE(std::holds_alternative<DegenerateBranch>(r));
    const auto& d = std::get<DegenerateBranch>(r);
    EXPECT_EQ(d.exponent, 2);
    EXPECT_EQ(d.scale * d.base.pow(2), P("(x - y^2)^2"));

    // Up to a scalar: 4 (x - y^2)^3.
    r = zl_screen(P("4*(x - y^2)^3 + x"));
    ASSERT_TRUE(std::holds_alternative<DegenerateBranch>(r));
    EXPECT_EQ(std::get<DegenerateBranch>(r).exponent, 3);

    // Coordinates sit in this branch too.
    r = zl_screen(P("y - x^2"));
    ASSERT_TRUE(std::holds_alternative<Candidates>(r));
    EXPECT_TRUE(std::get<Candidates>(r).contains(1, 1));
    EXPECT_TRUE(std::holds_alternative<Candidates>(zl_screen(P("2*x - 3*y + 1"))));
}

TEST(MonicRoot, Recurrence) {
    UniPoly h = U("t^3 - 2*t + 5");
    auto r = detail::monic_root(h.pow(4), 4);
    ASSERT_TRUE(r);
    EXPECT_EQ(*r, h);
    EXPECT_FALSE(detail::monic_root(h.pow(4) + UniPoly::constant(1), 4));
    EXPECT_FALSE(detail::monic_root(h.pow(2), 3));
}

TEST(ZLDecide, Examples) {
    auto d = zl_decide(P("x^2 - y^3"), {U("t^3"), U("t^2")});
    ASSERT_TRUE(std::holds_alternative<EquivalentToStandard>(d));
    EXPECT_EQ(std::get<EquivalentToStandard>(d).k, 2);
    EXPECT_EQ(std::get<EquivalentToStandard>(d).l, 3);

    d = zl_decide(P("y - x^2"), {U("t"), U("t^2")});
    ASSERT_TRUE(std::holds_alternative<EquivalentToStandard>(d));
    EXPECT_EQ(std::get<EquivalentToStandard>(d).k, 1);

    try {
        zl_decide(P("x^2 - y^3"), {U("t^3 + 1"), U("t^2")});
        FAIL() << "expected FiberError";
    } catch (const FiberError& e) {
        EXPECT_EQ(e.residual(), U("2*t^3 + 1"));
    }
}

TEST(ZLDecide, TranslatedAndShiftedCurves) {
    // (x - 1)^2 = (y + 2)^3 through x = (t+1)^3 + 1, y = (t+1)^2 - 2.
    auto d = zl_decide(P("(x - 1)^2 - (y + 2)^3"), {U("(t+1)^3 + 1"), U("(t+1)^2 - 2")});
    ASSERT_TRUE(std::holds_alternative<EquivalentToStandard>(d));
    EXPECT_EQ(std::get<EquivalentToStandard>(d).k, 2);
    EXPECT_EQ(std::get<EquivalentToStandard>(d).l, 3);

    // A reducible p containing the curve is not certified.
    d = zl_decide(P("(x^2 - y^3)*(x^2 + 7)"), {U("t^3"), U("t^2")});
    EXPECT_TRUE(std::holds_alternative<ZLUnknown>(d));
}

TEST(ZLProperties, StandardFormsAreNeverRuledOut) {
    for (int k = 3; k <= 6; ++k)
        for (int l = 2; l < k; ++l) {
            if (std::gcd(k, l) != 1) continue;
            BiPoly p = BiPoly::monomial(1, k, 0) - BiPoly::monomial(1, 0, l);
            auto r = zl_screen(p);
            ASSERT_TRUE(std::holds_alternative<Candidates>(r)) << p.str();
            EXPECT_TRUE(std::get<Candidates>(r).contains(k, l));
            auto d = zl_decide(p, {UniPoly::monomial(1, l), UniPoly::monomial(1, k)});
            ASSERT_TRUE(std::holds_alternative<EquivalentToStandard>(d));
            EXPECT_EQ(std::get<EquivalentToStandard>(d).k, k);
            EXPECT_EQ(std::get<EquivalentToStandard>(d).l, l);
        }
}

// Images of x^k - y^l under tame words: when the image still has the
// triangle shape, conditions (a) and (b) hold for the true (k, l); otherwise
// newton_shape reports none.
TEST(ZLProperties, ScreenStableOnOrbits) {
    std::mt19937_64 rng(4242);
    int shaped = 0;
    for (int k = 3; k <= 6; ++k)
        for (int l = 2; l < k; ++l) {
            if (std::gcd(k, l) != 1) continue;
            BiPoly base = BiPoly::monomial(1, k, 0) - BiPoly::monomial(1, 0, l);
            for (int n = 0; n < 50; ++n) {
                AutoWord w = random_word(rng, {3, 3, 2});
                BiPoly p = apply(w, base);
                if (p.is_constant()) continue;
                auto r = zl_screen(p);
                if (auto* out = std::get_if<RuledOut>(&r)) {
                    EXPECT_NE(out->reason, "max-bound") << p.str();
                    EXPECT_NE(out->reason, "divisibility") << p.str();
                    if (out->reason == "shape") {
                        EXPECT_FALSE(newton_shape(p));
                    }
                }
                int d = p.deg();
                EXPECT_LE(k, d);
                EXPECT_TRUE(d % k == 0 || d % l == 0) << p.str();
                if (newton_shape(p)) ++shaped;
                // The parametrization transported along w certifies (k, l).
                // Checking it on the fiber is a large exact expansion, so
                // only the first few words take part.
                if (n >= 10) continue;
                Auto inv = w.inverse().evaluate();
                UniPoly u = inv.x_image.on_curve(UniPoly::monomial(1, l), UniPoly::monomial(1, k));
                UniPoly v = inv.y_image.on_curve(UniPoly::monomial(1, l), UniPoly::monomial(1, k));
                auto dec = zl_decide(p, {u, v});
                // The swap relates x^k - y^l and x^l - y^k, so only the
                // unordered pair is determined.
                if (auto* e = std::get_if<EquivalentToStandard>(&dec)) {
                    EXPECT_EQ(std::minmax(e->k, e->l), std::minmax(l, k));
                }
            }
        }
    EXPECT_GT(shaped, 0);
}

}  // namespace
}  // namespace peakred
