#include <gtest/gtest.h>

#include "cpaths/confluence.hpp"
#include "cpaths/derivation.hpp"
#include "cpaths/sexpr.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace cpaths;
using namespace t;

namespace {

Path r_path() { return Path::beta(redex_a()); }

// Paths from the generator, together with a second path out of their target.
std::pair<Path, Path> composable(PathGenerator& g) {
    Path p = g.path(3);
    return {p, g.path_from(p.tgt(), 3)};
}

}  // namespace

TEST(Derivation, Boundaries) {
    Path p = r_path();
    EXPECT_EQ(d_src(Derivation::refl(p)), p);

    StepWitness s = make_step(Path::symm(Path::refl(C("a"))), {}, RuleId::SR);
    EXPECT_EQ(d_src(Derivation::inv(Derivation::step(s))), s.target);

    StepWitness s1 = make_step(Path::trans(p, Path::refl(C("a"))), {}, RuleId::TRR);
    StepWitness s2 = make_step(Path::symm(Path::symm(p)), {}, RuleId::SS);
    Derivation d = Derivation::comp(Derivation::step(s1), Derivation::inv(Derivation::step(s2)));
    EXPECT_EQ(d_tgt(d), Path::symm(Path::symm(p)));
}

TEST(Derivation, VerifyCatchesBadChain) {
    StepWitness s = make_step(Path::symm(Path::refl(C("a"))), {}, RuleId::SR);
    Derivation bad = Derivation::comp(Derivation::step(s), Derivation::refl(Path::refl(C("b"))));
    Verdict v = verify(bad);
    ASSERT_FALSE(v);
    EXPECT_EQ(v.failure().kind, Failure::Kind::BadChain);
    EXPECT_TRUE(verify(Derivation::refl(r_path())).is_ok());
}

TEST(Derivation, VerifyCatchesBadStep) {
    StepWitness s = make_step(Path::symm(Path::refl(C("a"))), {}, RuleId::SR);
    s.rule = RuleId::SS;
    Derivation d = Derivation::inv(Derivation::step(s));
    Verdict v = verify(d);
    ASSERT_FALSE(v);
    EXPECT_EQ(v.failure().kind, Failure::Kind::BadStep);
    EXPECT_EQ(v.failure().pos, (TreePos{0}));
}

TEST(Derivation, FromTrace) {
    Path p = r_path();
    Trace empty{p, {}};
    EXPECT_EQ(from_trace(empty), Derivation::refl(p));

    StepWitness s1 = make_step(Path::symm(Path::symm(Path::trans(p, Path::refl(C("a"))))), {}, RuleId::SS);
    StepWitness s2 = make_step(s1.target, {}, RuleId::TRR);
    EXPECT_EQ(from_trace(Trace{s1.source, {s1}}), Derivation::step(s1));
    EXPECT_EQ(from_trace(Trace{s1.source, {s1, s2}}), Derivation::comp(Derivation::step(s1), Derivation::step(s2)));
    EXPECT_THROW(from_trace(Trace{s1.source, {s2}}), IllFormed);
}

TEST(Derivation, Delta) {
    Path refl = Path::refl(C("a"));
    EXPECT_EQ(delta(refl), Derivation::refl(refl));
    Derivation d = delta(Path::symm(refl));
    ASSERT_TRUE(d.is(Derivation::Kind::Step));
    EXPECT_EQ(d.witness().rule, RuleId::SR);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Path p = gen_path(GenConfig{.seed = seed, .max_path_depth = 5});
        Derivation dp = delta(p);
        EXPECT_EQ(d_src(dp), p);
        EXPECT_TRUE(is_normal(d_tgt(dp)));
        EXPECT_TRUE(verify(dp).is_ok());
    }
}

TEST(Derivation, Gamma) {
    Path p = r_path();
    Derivation g = gamma(p, p);
    EXPECT_EQ(d_src(g), p);
    EXPECT_EQ(d_tgt(g), p);

    Path tp = Path::trans(p, Path::refl(C("a")));
    g = gamma(tp, p);
    ASSERT_TRUE(g.is(Derivation::Kind::Comp));
    EXPECT_EQ(g.first(), Derivation::step(make_step(tp, {}, RuleId::TRR)));
    EXPECT_EQ(g.second(), Derivation::inv(Derivation::refl(p)));
    EXPECT_TRUE(verify(g).is_ok());

    Expr inner = A(L("y", V("y")), C("v"));
    Expr e = A(L("x", V("x")), inner);
    Path p1 = Path::trans(Path::beta(e), Path::beta(inner));
    Path p2 = Path::trans(Path::mu(L("x", V("x")), Path::beta(inner)), Path::beta(A(L("x", V("x")), C("v"))));
    EXPECT_THROW(gamma(p1, p2), NotEquivalent);
}

TEST(Derivation, Whisker) {
    Path p = r_path();
    Path g = Path::refl(C("a"));
    EXPECT_EQ(whisker2(Side::Right, g, Derivation::refl(p)), Derivation::refl(Path::trans(p, g)));

    Derivation step = Derivation::step(make_step(Path::symm(Path::symm(p)), {}, RuleId::SS));
    Derivation w = whisker2(Side::Right, g, step);
    ASSERT_TRUE(w.is(Derivation::Kind::Step));
    EXPECT_EQ(w.witness().pos, (PathPos{0}));
    EXPECT_TRUE(verify(w).is_ok());

    Path h = Path::refl(redex_a());
    Derivation comp = Derivation::comp(step, Derivation::inv(step));
    EXPECT_EQ(whisker2(Side::Left, h, comp),
              Derivation::comp(whisker2(Side::Left, h, step), whisker2(Side::Left, h, Derivation::inv(step))));
    EXPECT_TRUE(verify(whisker2(Side::Left, h, comp)).is_ok());

    EXPECT_THROW(whisker2(Side::Right, Path::refl(C("b")), step), IllFormed);
}

TEST(Derivation, HorizontalComposition) {
    Path f = r_path();
    Path g = Path::refl(C("a"));
    Derivation h = hcomp2(Derivation::refl(f), Derivation::refl(g));
    EXPECT_EQ(d_src(h), Path::trans(f, g));
    EXPECT_EQ(d_tgt(h), Path::trans(f, g));

    Derivation alpha = Derivation::step(make_step(Path::symm(Path::symm(f)), {}, RuleId::SS));
    Derivation beta = Derivation::step(make_step(Path::symm(g), {}, RuleId::SR));
    Derivation x = hcomp2(alpha, beta);
    Derivation y = hcomp2_alt(alpha, beta);
    EXPECT_TRUE(verify(x).is_ok()) << verify(x).describe();
    EXPECT_TRUE(verify(y).is_ok()) << verify(y).describe();
    EXPECT_EQ(d_src(x), d_src(y));
    EXPECT_EQ(d_tgt(x), d_tgt(y));
    EXPECT_EQ(d_src(x), Path::trans(Path::symm(Path::symm(f)), Path::symm(g)));
    EXPECT_EQ(d_tgt(x), Path::trans(f, g));
}

TEST(Derivation, GroupoidWitnesses) {
    Path p = r_path();
    Path q = Path::symm(p);
    Path r = Path::refl(redex_a());
    Derivation a = assoc2(p, q, r);
    EXPECT_EQ(d_src(a), Path::trans(Path::trans(p, q), r));
    EXPECT_EQ(d_tgt(a), Path::trans(p, Path::trans(q, r)));
    EXPECT_EQ(a.witness().rule, RuleId::TT);

    Derivation ri = witness2(GroupoidLaw::RInv, std::span<const Path>(&p, 1));
    EXPECT_EQ(d_src(ri), Path::trans(p, Path::symm(p)));
    EXPECT_EQ(d_tgt(ri), Path::refl(p.src()));

    Path ra = Path::refl(C("a"));
    Derivation lu = lunit2(ra);
    EXPECT_EQ(d_src(lu), Path::trans(ra, ra));
    EXPECT_EQ(d_tgt(lu), ra);

    EXPECT_THROW(assoc2(p, p, p), IllFormed);
    for (auto name : {"assoc", "lunit", "runit", "linv", "rinv", "invinv"}) {
        auto law = law_from_name(name);
        ASSERT_TRUE(law.has_value());
        EXPECT_STREQ(law_name(*law), name);
    }
}

// Everything the builders produce verifies and is globular.
TEST(DerivationProperty, BuildersVerify) {
    PathGenerator gen(GenConfig{.seed = 21, .max_path_depth = 4});
    for (int i = 0; i < 300; ++i) {
        auto [p, q] = composable(gen);
        Derivation dp = delta(p);
        Derivation dq = delta(q);
        for (const Derivation& d : {dp, gamma(p, p), whisker2(Side::Right, q, dp), whisker2(Side::Left, p, dq),
                                    hcomp2(dp, dq), hcomp2_alt(dp, dq)}) {
            EXPECT_TRUE(verify(d).is_ok()) << verify(d).describe();
            EXPECT_TRUE(globular_check(d));
            EXPECT_TRUE(oracle::same_ends(oracle::endpoints(d_src(d)), oracle::endpoints(d_tgt(d))));
        }
    }
}

// gamma exists exactly when the zig-zag search connects the paths.
TEST(DerivationProperty, GammaExistsIffConnected) {
    auto paths = enumerate_paths(default_family(), 2);
    int equivalent = 0;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        for (std::size_t j = i; j < paths.size(); ++j) {
            const Path& p = paths[i];
            const Path& q = paths[j];
            if (!(p.src() == q.src() && p.tgt() == q.tgt())) continue;
            bool has_gamma = true;
            try {
                Derivation g = gamma(p, q);
                EXPECT_TRUE(verify(g).is_ok());
            } catch (const NotEquivalent&) {
                has_gamma = false;
            }
            EXPECT_EQ(has_gamma, bfs_rweq(p, q, 12).connected) << to_sexpr(p) << " / " << to_sexpr(q);
            equivalent += has_gamma;
        }
    }
    EXPECT_GT(equivalent, 0);
}
