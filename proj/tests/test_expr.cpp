#include <gtest/gtest.h>

#include "cpaths/confluence.hpp"
#include "cpaths/error.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace cpaths;
using namespace t;

TEST(Expr, IdentifiersAreChecked) {
    EXPECT_THROW(Expr::var("1x"), InvalidIdentifier);
    EXPECT_THROW(Expr::constant(""), InvalidIdentifier);
    EXPECT_NO_THROW(Expr::var("x_1'"));
}

TEST(Expr, SubstFreeOccurrence) {
    EXPECT_TRUE(identical(subst(A(V("y"), V("x")), "x", C("v")), A(V("y"), C("v"))));
}

TEST(Expr, SubstStopsAtShadowingBinder) {
    EXPECT_TRUE(identical(subst(L("x", V("x")), "x", C("v")), L("x", V("x"))));
}

TEST(Expr, SubstAvoidsCapture) {
    Expr got = subst(L("y", V("x")), "x", V("y"));
    ASSERT_TRUE(got.is_lam());
    EXPECT_NE(got.name(), "y");
    EXPECT_TRUE(oracle::alpha(got, L("z", V("y"))));
}

TEST(Expr, AlphaEquivalence) {
    EXPECT_TRUE(alpha_eq(L("x", V("x")), L("y", V("y"))));
    EXPECT_FALSE(alpha_eq(V("x"), V("y")));
    EXPECT_TRUE(alpha_eq(L("x", L("y", V("x"))), L("y", L("x", V("y")))));
    EXPECT_FALSE(alpha_eq(L("x", L("y", V("x"))), L("x", L("y", V("y")))));
    EXPECT_FALSE(alpha_eq(V("x"), C("x")));
}

TEST(Expr, Beta) {
    EXPECT_TRUE(identical(beta_contract(A(L("x", V("x")), C("v"))), C("v")));
    EXPECT_TRUE(identical(beta_contract(A(L("y", A(V("y"), C("v"))), C("z"))), A(C("z"), C("v"))));
    EXPECT_THROW(beta_contract(C("v")), NotARedex);
}

TEST(Expr, Eta) {
    EXPECT_TRUE(identical(eta_contract(L("w", A(C("z"), V("w")))), C("z")));
    EXPECT_THROW(eta_contract(L("x", A(V("x"), V("x")))), NotARedex);
    EXPECT_TRUE(identical(eta_contract(L("x", A(A(C("f"), C("y")), V("x")))), A(C("f"), C("y"))));
}

TEST(Expr, FreshNameSkipsTakenNames) {
    EXPECT_EQ(fresh_name("x", {"x", "x1"}), "x2");
    EXPECT_EQ(fresh_name("x3", {"x", "x1"}), "x2");
}

TEST(Expr, SubexprPositions) {
    Expr e = A(L("x", V("x")), C("a"));
    EXPECT_TRUE(identical(subexpr_at(e, {ExprSel::Fun, ExprSel::Body}), V("x")));
    EXPECT_THROW(subexpr_at(e, {ExprSel::Arg, ExprSel::Body}), InvalidPosition);
    EXPECT_TRUE(identical(replace_subexpr(e, {ExprSel::Arg}, C("b")), A(L("x", V("x")), C("b"))));
}

// Generated terms: the library's alpha-equivalence and de Bruijn keys agree
// with the oracle's nameless comparison, and beta agrees with nameless beta.
TEST(ExprProperty, AgreesWithNamelessOracle) {
    PathGenerator gen(GenConfig{.seed = 7, .max_expr_depth = 4});
    for (int i = 0; i < 2000; ++i) {
        Expr x = gen.expr();
        Expr y = gen.expr();
        const bool o = oracle::alpha(x, y);
        EXPECT_EQ(alpha_eq(x, y), o);
        EXPECT_EQ(debruijn_key(x) == debruijn_key(y), o);
    }
    for (int i = 0; i < 2000; ++i) {
        Expr r = gen.beta_redex();
        auto expect = oracle::beta(oracle::to_db(r));
        ASSERT_TRUE(expect.has_value());
        EXPECT_TRUE(oracle::eq(oracle::to_db(beta_contract(r)), *expect)) << debruijn_key(r);
        Expr h = gen.eta_redex();
        auto expect_eta = oracle::eta(oracle::to_db(h));
        ASSERT_TRUE(expect_eta.has_value());
        EXPECT_TRUE(oracle::eq(oracle::to_db(eta_contract(h)), *expect_eta));
    }
}

TEST(ExprProperty, SubstitutionMatchesNamelessSubstitution) {
    PathGenerator gen(GenConfig{.seed = 11, .max_expr_depth = 5});
    for (int i = 0; i < 2000; ++i) {
        Expr body = gen.expr();
        Expr value = gen.expr();
        // body[value/x] is the beta reduct of (lam x body) value
        Expr redex = A(L("x", body), value);
        auto expect = oracle::beta(oracle::to_db(redex));
        EXPECT_TRUE(oracle::eq(oracle::to_db(subst(body, "x", value)), *expect));
    }
}
