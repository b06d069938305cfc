#include <gtest/gtest.h>

#include <random>

#include "peakred/canon.hpp"
#include "peakred/random.hpp"
#include "shear_oracle.hpp"

namespace peakred {
namespace {

BiPoly P(const char* s) { return parse_poly(s); }

TEST(FindReducingShear, Examples) {
    auto r = find_reducing_shear(P("x^3 + y"));
    ASSERT_TRUE(std::holds_alternative<ShearStep>(r));
    auto s = std::get<ShearStep>(r);
    EXPECT_EQ(s.k, 3);
    EXPECT_EQ(s.lambda, -1);
    EXPECT_EQ(s.orientation, Side::Y);
    EXPECT_EQ(apply(s, P("x^3 + y")), P("y"));

    EXPECT_TRUE(std::holds_alternative<ShearNone>(find_reducing_shear(P("x^2 - y^3"))));

    r = find_reducing_shear(P("(x+y)^3 + x"));
    ASSERT_TRUE(std::holds_alternative<ShearStep>(r));
    s = std::get<ShearStep>(r);
    EXPECT_EQ(s.pre_linear, (Linear{1, 0, -1, 1}));
    EXPECT_EQ(s.k, 3);
    EXPECT_EQ(s.lambda, -1);
    EXPECT_EQ(apply(s, P("(x+y)^3 + x")), P("x"));
}

TEST(FindReducingShear, IrrationalCancellation) {
    // Cancelling -2 y^4 against x^2 needs lambda^2 = 2.
    auto r = find_reducing_shear(P("x^2 - 2*y^4 + y"));
    ASSERT_TRUE(std::holds_alternative<ShearNeedsExtension>(r));
    EXPECT_EQ(std::get<ShearNeedsExtension>(r).minimal_poly, (UniPoly{-2, 0, 1}));
}

TEST(CanonicalModel, Examples) {
    auto o = canonical_model(P("(x + y^2)^2 + y"));
    ASSERT_TRUE(std::holds_alternative<Model>(o));
    const auto& m = std::get<Model>(o);
    EXPECT_EQ(m.canonical.deg(), 1);
    ASSERT_EQ(m.trace.steps.size(), 2u);
    EXPECT_EQ(m.trace.degrees, (std::vector<Degree>{Degree(4), Degree(2), Degree(1)}));

    o = canonical_model(P("x"));
    EXPECT_EQ(std::get<Model>(o).canonical, P("x"));
    EXPECT_TRUE(std::get<Model>(o).trace.steps.empty());

    o = canonical_model(P("x^2 - y^3"));
    EXPECT_EQ(std::get<Model>(o).canonical, P("x^2 - y^3"));

    o = canonical_model(P("x^2 - 2*y^4 + y"));
    ASSERT_TRUE(std::holds_alternative<NeedsExtension>(o));
    EXPECT_EQ(std::get<NeedsExtension>(o).at, P("x^2 - 2*y^4 + y"));
}

TEST(IsCoordinate, Examples) {
    auto v = is_coordinate(P("y + x^3"));
    ASSERT_TRUE(std::holds_alternative<CoordYes>(v));
    EXPECT_EQ(apply(std::get<CoordYes>(v).witness, P("x")), P("y + x^3"));
    EXPECT_TRUE(std::holds_alternative<CoordNo>(is_coordinate(P("x^2 - y^3"))));
    EXPECT_TRUE(std::holds_alternative<CoordNo>(is_coordinate(P("5"))));
    v = is_coordinate(P("3*y - 2*x + 7"));
    ASSERT_TRUE(std::holds_alternative<CoordYes>(v));
    EXPECT_EQ(apply(std::get<CoordYes>(v).witness, P("x")), P("3*y - 2*x + 7"));
}

TEST(NewtonShape, Examples) {
    auto nd = newton_shape(P("x^2 - y^3"));
    ASSERT_TRUE(nd);
    EXPECT_EQ(nd->n, 2);
    EXPECT_EQ(nd->m, 3);
    EXPECT_TRUE(nd->mixed.empty());

    nd = newton_shape(P("x^3 + y^2 + x*y"));
    ASSERT_TRUE(nd);
    EXPECT_EQ(nd->n, 3);
    EXPECT_EQ(nd->m, 2);
    EXPECT_EQ(nd->mixed.size(), 1u);

    EXPECT_FALSE(newton_shape(P("x^2*y + x")));
    EXPECT_FALSE(newton_shape(P("x^2 + y^2 + x^2*y")));
    EXPECT_THROW(newton_shape(P("4")), std::invalid_argument);
    nd = newton_shape(P("x^3 + y^2 + x + 1"));
    ASSERT_TRUE(nd);
    EXPECT_EQ(nd->lower.size(), 2u);
}

TEST(TwoPowerTest, Examples) {
    auto r = test_nonequiv_thm11(P("x^3 + y^2 + x*y"), P("x^5 + y^3 + x*y"));
    ASSERT_TRUE(std::holds_alternative<Thm11Certificate>(r));
    EXPECT_EQ(std::get<Thm11Certificate>(r).q.n, 5);

    r = test_nonequiv_thm11(P("x^2 + y^4"), P("x^5 + y^3"));
    EXPECT_EQ(std::get<Inapplicable>(r).reason, "n divides m");
    r = test_nonequiv_thm11(P("x^3 + y^2"), P("x^3 + y^2"));
    EXPECT_EQ(std::get<Inapplicable>(r).reason, "max degrees equal");
    r = test_nonequiv_thm11(P("x^3 + y^2 + x"), P("x^5 + y^3"));
    EXPECT_EQ(std::get<Inapplicable>(r).reason, "p is not of the two-power shape");
}

TEST(Equivalent, Examples) {
    BiPoly p = P("x^2 - y^3");
    Auto w = compose(parse_auto("x + 2*y^2 - 1; y"), parse_auto("x; y + x"));
    BiPoly q = apply(w, p);
    auto v = equivalent(p, q);
    ASSERT_TRUE(std::holds_alternative<EquivWitness>(v));
    EXPECT_EQ(apply(std::get<EquivWitness>(v).phi, p), q);

    v = equivalent(P("x^3 + y^2 + x*y"), P("x^5 + y^3 + x*y"));
    ASSERT_TRUE(std::holds_alternative<NotEquivalent>(v));
    EXPECT_EQ(std::get<NotEquivalent>(v).rule, "thm1.1");

    // The two-power criterion already separates these.
    v = equivalent(p, P("x^2 - y^5"));
    ASSERT_TRUE(std::holds_alternative<NotEquivalent>(v));

    v = equivalent(p, P("x^4 + y^4 + x*y"));
    ASSERT_TRUE(std::holds_alternative<NotEquivalent>(v));
    EXPECT_EQ(std::get<NotEquivalent>(v).rule, "canon-degree");

    EXPECT_THROW(equivalent(p, p, Budget{0, 4, 5}), std::invalid_argument);
}

TEST(Equivalent, PlateauShear) {
    // x*y + y^3 is shear-minimal; x -> x + y^2 keeps the degree at 3.
    BiPoly p = P("x*y + y^4 + x");
    BiPoly q = apply(parse_auto("x + y^2 - 2*y; y"), p);
    auto v = equivalent(p, q);
    ASSERT_TRUE(std::holds_alternative<EquivWitness>(v));
    EXPECT_EQ(apply(std::get<EquivWitness>(v).phi, p), q);
}

class CanonProperties : public ::testing::Test {
protected:
    std::mt19937_64 rng{777};
};

TEST_F(CanonProperties, TraceReplaysAndDescends) {
    for (int n = 0; n < 40; ++n) {
        BiPoly base = testing::sample_shear_poly(rng, true);
        BiPoly p = apply(random_word(rng, {3, 3, 2}).evaluate(), base);
        auto o = canonical_model(p);
        const auto& t = trace_of(o);
        ASSERT_EQ(t.degrees.size(), t.steps.size() + 1);
        for (std::size_t i = 1; i < t.degrees.size(); ++i) EXPECT_LT(t.degrees[i], t.degrees[i - 1]);
        EXPECT_EQ(apply(t.word(), p), reached(o));
    }
}

TEST_F(CanonProperties, DegreeIsAnOrbitInvariant) {
    for (const char* s : {"x", "x^2 - y^3", "x^3 + y^2 + x*y", "x^2 + y^5"}) {
        BiPoly base = P(s);
        int d0 = std::get<Model>(canonical_model(base)).canonical.deg();
        for (int n = 0; n < 20; ++n) {
            BiPoly img = apply(random_word(rng, {4, 3, 3}).evaluate(), base);
            auto o = canonical_model(img);
            ASSERT_TRUE(std::holds_alternative<Model>(o)) << img.str();
            EXPECT_EQ(reached(o).deg(), d0) << s << " -> " << img.str();
        }
    }
}

TEST_F(CanonProperties, ShearSearchMatchesBruteForce) {
    for (int n = 0; n < 40; ++n) {
        BiPoly p = testing::sample_shear_poly(rng, n % 2 == 0);
        bool found = std::holds_alternative<ShearStep>(find_reducing_shear(p));
        EXPECT_EQ(found, testing::brute_force_reduces(p)) << p.str();
    }
}

TEST_F(CanonProperties, TwoPowerTestNeverFiresOnAnOrbit) {
    for (const char* s : {"x^3 + y^2 + x*y", "x^2 + y^5", "x^5 + y^3 + x*y"}) {
        for (int n = 0; n < 10; ++n) {
            BiPoly p = P(s);
            BiPoly q = apply(random_word(rng, {3, 3, 3}).evaluate(), p);
            EXPECT_TRUE(std::holds_alternative<Inapplicable>(test_nonequiv_thm11(p, q))) << q.str();
        }
    }
}

TEST_F(CanonProperties, WitnessesVerify) {
    for (int n = 0; n < 15; ++n) {
        BiPoly p = P(n % 2 ? "x^2 - y^3" : "x^3 + y^2 + x*y");
        BiPoly q = apply(random_word(rng, {3, 3, 2}).evaluate(), p);
        auto v = equivalent(p, q);
        ASSERT_FALSE(std::holds_alternative<NotEquivalent>(v)) << q.str();
        if (auto* w = std::get_if<EquivWitness>(&v)) {
            EXPECT_EQ(apply(w->phi, p), q);
        }
    }
}

}  // namespace
}  // namespace peakred
