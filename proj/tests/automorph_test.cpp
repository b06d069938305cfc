#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "peakred/automorph.hpp"
#include "peakred/random.hpp"

namespace peakred {
namespace {

BiPoly P(const char* s) { return parse_poly(s); }
Auto A(const char* s) { return parse_auto(s); }

TEST(Apply, HandSubstitution) {
    EXPECT_EQ(apply(A("x; y - x"), P("(x+y)^3 + x")), P("y^3 + x"));
    BiPoly p = P("3*x^2*y - 7/2*y + 1");
    EXPECT_EQ(apply(Auto::identity(), p), p);
    EXPECT_EQ(apply(A("x; y + x^2"), P("y")), P("y + x^2"));
}

TEST(Compose, RightActionConvention) {
    Auto phi = A("x; y - x"), psi = A("x - y^3; y");
    // Two-step substitution: (x+y)^3 + x -> y^3 + x -> (y^3) + (x - y^3) = x.
    EXPECT_EQ(apply(compose(phi, psi), P("(x+y)^3 + x")), P("x"));
    EXPECT_EQ(compose(Auto::identity(), psi), psi);
    EXPECT_EQ(compose(phi, invert(phi)), Auto::identity());
}

TEST(ParseAuto, ArrowAndBareForms) {
    EXPECT_EQ(A("x -> y; y -> x + y^2"), A("y; x + y^2"));
    EXPECT_THROW(A("y -> x; x -> y"), ParseError);
    EXPECT_THROW(A("x + y"), ParseError);
}

TEST(FactorJvdk, SwapAfterShear) {
    auto r = factor_jvdk(P("y"), P("x + y^2"));
    ASSERT_TRUE(std::holds_alternative<JvdkFactorization>(r));
    const auto& f = std::get<JvdkFactorization>(r);
    ASSERT_EQ(f.word.factors.size(), 2u);
    EXPECT_EQ(f.word.factors[0], Generator(TriangularY{UniPoly::monomial(1, 2), 1}));
    EXPECT_EQ(f.word.factors[1], Generator(Linear{0, 1, 1, 0}));
    EXPECT_EQ(f.word.evaluate(), A("y; x + y^2"));
}

TEST(FactorJvdk, RejectsNonconstantJacobian) {
    auto r = factor_jvdk(P("x"), P("x*y"));
    ASSERT_TRUE(std::holds_alternative<NotAutomorphism>(r));
    EXPECT_EQ(std::get<NotAutomorphism>(r).rule, "jacobian-nonconstant");
    EXPECT_EQ(std::get<NotAutomorphism>(r).detail, "jacobian = x");
}

TEST(FactorJvdk, RejectsZeroJacobianAndStuckReductions) {
    EXPECT_EQ(std::get<NotAutomorphism>(factor_jvdk(P("x + y"), P("2*x + 2*y"))).rule, "jacobian-zero");
    // Constant Jacobian but degrees 2 and 3 do not divide: the reduction stalls.
    // J(x + y^2, y + x^3) = 1 - 6 x^2 y is not constant; instead use a pair with
    // constant Jacobian that is not invertible over the reduction: none exists in
    // two variables, so the stalled case is exercised via jvdk_step directly.
    EXPECT_FALSE(jvdk_step(P("x^2"), P("y^3")));
    EXPECT_FALSE(jvdk_step(P("x^2 + y^2"), P("x*y")));
}

TEST(FactorJvdk, IdentityIsTheEmptyWord) {
    auto r = factor_jvdk(P("x"), P("y"));
    ASSERT_TRUE(std::holds_alternative<JvdkFactorization>(r));
    EXPECT_TRUE(std::get<JvdkFactorization>(r).word.factors.empty());
}

TEST(Invert, Examples) {
    EXPECT_EQ(invert(A("x; y + x^2")), A("x; y - x^2"));
    EXPECT_EQ(invert(A("y; x")), A("y; x"));
    Auto phi = A("x + y^2; y + 1");
    Auto inv = invert(phi);
    EXPECT_EQ(inv, A("x - (y-1)^2; y - 1"));
    EXPECT_EQ(compose(phi, inv), Auto::identity());
    EXPECT_EQ(compose(inv, phi), Auto::identity());
    EXPECT_THROW(invert(A("x; x*y")), NotAutomorphismError);
}

TEST(Classify, Shapes) {
    // Twisted shapes with a nonlinear part and a cross term have a nonconstant
    // Jacobian, so only the shape classifier accepts them.
    EXPECT_EQ(classify_shape(A("2*x + y^3; y + x")), AutoClass::TUT);
    EXPECT_EQ(classify_shape(A("x + y + 1; y + x^2")), AutoClass::TLT);
    EXPECT_THROW(classify(A("2*x + y^3; y + x")), NotAutomorphismError);
    EXPECT_EQ(classify(A("2*x + y^3; -y + 4")), AutoClass::TUT);
    EXPECT_EQ(classify(A("x + 1; y + x^2")), AutoClass::TLT);
    EXPECT_EQ(classify(compose(A("x + y^2; y"), A("x; y + x^2"))), AutoClass::General);
    EXPECT_EQ(classify(A("y + 3; 2*x - y")), AutoClass::Affine);
    EXPECT_THROW(classify(A("x; x*y")), NotAutomorphismError);
}

// ---------------------------------------------------------------------------
// Properties

class AutoProperties : public ::testing::Test {
protected:
    std::mt19937_64 rng{77};
    WordShape shape{4, 3, 3};
};

TEST_F(AutoProperties, ActionIsFunctorial) {
    for (int n = 0; n < 60; ++n) {
        Auto phi = random_word(rng, {2, 3, 3}).evaluate();
        Auto psi = random_word(rng, {2, 3, 3}).evaluate();
        BiPoly p = testing::random_bipoly(rng, 3, 4, 4);
        EXPECT_EQ(apply(compose(phi, psi), p), apply(psi, apply(phi, p)));
    }
}

TEST_F(AutoProperties, FactorizationRecomposesAndDescends) {
    for (int n = 0; n < 80; ++n) {
        Auto phi = random_word(rng, shape).evaluate();
        auto r = factor_jvdk(phi);
        ASSERT_TRUE(std::holds_alternative<JvdkFactorization>(r)) << phi.str();
        const auto& f = std::get<JvdkFactorization>(r);
        EXPECT_EQ(f.word.evaluate(), phi);
        BiPoly jac = jacobian(phi);
        EXPECT_EQ(jac.deg(), 0);

        // Replay the steps: the (larger, smaller) degree pair strictly drops.
        BiPoly u = phi.x_image, v = phi.y_image;
        for (const auto& s : f.steps) {
            auto measure = [&] { return std::make_pair(std::max(u.deg(), v.deg()), std::min(u.deg(), v.deg())); };
            auto before = measure();
            apply_step(s, u, v);
            EXPECT_LT(measure(), before);
        }
        EXPECT_EQ(compose(phi, f.word.inverse()), Auto::identity());
        EXPECT_EQ(compose(invert(phi), f.word), Auto::identity());
    }
}

TEST_F(AutoProperties, RejectsProductPairs) {
    for (int n = 0; n < 60; ++n) {
        BiPoly p = testing::random_bipoly(rng, 3, 3, 3);
        BiPoly q = testing::random_bipoly(rng, 2, 3, 3);
        if (q.deg() < 1 || p.deg() < 1) continue;
        EXPECT_TRUE(std::holds_alternative<NotAutomorphism>(factor_jvdk(p, p * q))) << p.str() << " ; " << q.str();
    }
}

TEST_F(AutoProperties, ClassMembershipUnderComposition) {
    auto tut = [&] { return to_auto(TriangularX{detail::random_shear_poly(rng, shape), 1}); };
    auto tlt = [&] { return to_auto(TriangularY{detail::random_shear_poly(rng, shape), 1}); };
    for (int n = 0; n < 40; ++n) {
        Auto a = tut(), b = tut(), c = tlt();
        Auto ab = compose(a, b);
        if (!ab.is_affine()) {
            EXPECT_EQ(classify(ab), AutoClass::TUT);
        }
        EXPECT_EQ(classify(compose(a, c)), AutoClass::General);
        EXPECT_EQ(classify(compose(c, a)), AutoClass::General);
    }
}

}  // namespace
}  // namespace peakred
