#include <gtest/gtest.h>

#include "cpaths/confluence.hpp"
#include "cpaths/error.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace cpaths;
using namespace t;

TEST(Path, ReflEndpoints) {
    Path p = Path::refl(C("v"));
    EXPECT_TRUE(identical(p.src(), C("v")));
    EXPECT_TRUE(identical(p.tgt(), C("v")));
}

TEST(Path, WorkedExampleEndpoints) {
    Path s = worked_path();
    ASSERT_TRUE(validate(s).is_ok()) << validate(s).describe();
    EXPECT_TRUE(alpha_eq(s.src(), worked_start()));
    EXPECT_TRUE(alpha_eq(s.tgt(), A(C("z"), C("v"))));
    EXPECT_TRUE(oracle::same_ends(oracle::endpoints(s),
                                  oracle::Ends{oracle::to_db(worked_start()), oracle::to_db(A(C("z"), C("v")))}));
}

TEST(Path, SymmSwaps) {
    Path p = Path::symm(Path::beta(A(L("x", V("x")), C("v"))));
    EXPECT_TRUE(identical(p.src(), C("v")));
    EXPECT_TRUE(identical(p.tgt(), A(L("x", V("x")), C("v"))));
}

TEST(Path, IllFormedReportsPosition) {
    Path bad = Path::trans(Path::refl(C("a")), Path::refl(C("b")));
    Verdict v = validate(bad);
    ASSERT_FALSE(v);
    EXPECT_EQ(v.failure().kind, Failure::Kind::IllFormed);
    EXPECT_THROW((void)bad.src(), IllFormed);

    Path not_redex = Path::symm(Path::beta(C("v")));
    v = validate(not_redex);
    ASSERT_FALSE(v);
    EXPECT_EQ(v.failure().pos, (TreePos{0}));
}

TEST(Path, ReplaceAt) {
    Expr e = C("a");
    Path p = Path::symm(Path::refl(e));
    EXPECT_EQ(replace_at(p, {0}, Path::refl(e)), p);

    Path q = Path::trans(Path::beta(redex_a()), Path::refl(C("a")));
    EXPECT_THROW(replace_at(q, {0}, Path::refl(C("b"))), IllFormed);
    EXPECT_THROW(replace_at(q, {2}, Path::refl(C("b"))), InvalidPosition);

    Path r = Path::beta(redex_a());
    Path ss = Path::symm(Path::symm(r));
    Path r2 = Path::symm(Path::symm(Path::symm(r)));  // same endpoints as symm r
    Path out = replace_at(ss, {0}, r2);
    EXPECT_EQ(out, Path::symm(r2));
    EXPECT_TRUE(oracle::same_ends(oracle::endpoints(out), oracle::endpoints(ss)));
}

TEST(Path, PositionsArePreorder) {
    Path p = Path::trans(Path::symm(Path::refl(C("a"))), Path::refl(C("a")));
    std::vector<PathPos> expect = {{}, {0}, {0, 0}, {1}};
    EXPECT_EQ(positions(p), expect);
}

TEST(Path, EqualityIsUpToAlphaOnTerms) {
    EXPECT_EQ(Path::refl(L("x", V("x"))), Path::refl(L("y", V("y"))));
    EXPECT_NE(Path::refl(C("a")), Path::refl(C("b")));
    EXPECT_EQ(path_key(Path::refl(L("x", V("x")))), path_key(Path::refl(L("y", V("y")))));
}

// Generated paths validate, and their endpoints agree with the oracle.
TEST(PathProperty, GeneratedPathsAgreeWithOracle) {
    for (std::uint64_t seed = 0; seed < 3000; ++seed) {
        Path p = gen_path(GenConfig{.seed = seed, .max_path_depth = 6});
        ASSERT_TRUE(validate(p).is_ok()) << validate(p).describe();
        auto ends = oracle::endpoints(p);
        ASSERT_TRUE(ends.has_value());
        EXPECT_TRUE(oracle::eq(oracle::to_db(p.src()), ends->first));
        EXPECT_TRUE(oracle::eq(oracle::to_db(p.tgt()), ends->second));
        EXPECT_LE(p.depth(), 6U);
    }
}

// Random pairs joined with trans: well-formedness matches the oracle.
TEST(PathProperty, WellFormednessMatchesOracle) {
    PathGenerator gen(GenConfig{.seed = 3, .max_path_depth = 3, .max_expr_depth = 2,
                                .base_constants = {"a", "b"}});
    int ok = 0;
    for (int i = 0; i < 3000; ++i) {
        Path p = Path::trans(gen.path(), gen.path());
        const bool expect = oracle::endpoints(p).has_value();
        EXPECT_EQ(p.well_formed(), expect);
        ok += expect;
    }
    EXPECT_GT(ok, 0);
}
