#include <gtest/gtest.h>

#include "cellgen.hpp"
#include "cpaths/certificate.hpp"
#include "cpaths/sexpr.hpp"
#include "support.hpp"

using namespace cpaths;
using namespace t;

TEST(Certificate, TraceRoundTrip) {
    Path p = parse_path("(symm (trans (refl (app (lam x (var x)) (const a))) (beta (app (lam x (var x)) (const a)))))");
    Trace tr = normalize(p).trace;
    json j = to_json(tr);
    EXPECT_EQ(j["steps"].size(), tr.steps.size());
    Trace back = trace_from_json(json::parse(j.dump()));
    EXPECT_TRUE(back.chained());
    EXPECT_EQ(from_trace(back), from_trace(tr));
    EXPECT_TRUE(verify(from_trace(back)).is_ok());
}

TEST(Certificate, Cell2Shape) {
    Path p = parse_path("(trans (beta (app (lam x (var x)) (const a))) (refl (const a)))");
    Derivation d = delta(p);
    json c = certificate(d);
    EXPECT_EQ(c["kind"], "cell2");
    EXPECT_EQ(c["src"], to_sexpr(p));
    EXPECT_TRUE(c["tree"].contains("step"));
    EXPECT_EQ(c["tree"]["step"]["rule"], "TRR");
    EXPECT_TRUE(verify_certificate(c).is_ok());
}

TEST(Certificate, CellRoundTrip) {
    CellGen gen(4);
    for (int i = 0; i < 50; ++i) {
        for (Face f : {Face(gen.derivation()), Face(gen.cell3()), Face(gen.cell4())}) {
            json c = json::parse(certificate(f).dump());
            EXPECT_TRUE(verify_certificate(c).is_ok()) << verify_certificate(c).describe();
            EXPECT_EQ(face_from_certificate(c), f);
        }
    }
}

TEST(Certificate, RejectsTampering) {
    Path p = parse_path("(symm (symm (trans (beta (app (lam x (var x)) (const a))) (refl (const a)))))");
    json good = certificate(delta(p));
    ASSERT_TRUE(verify_certificate(good).is_ok());

    json wrong_rule = good;
    wrong_rule["tree"]["comp"][0]["step"]["rule"] = "TT";
    EXPECT_FALSE(verify_certificate(wrong_rule).is_ok());

    json wrong_pos = good;
    wrong_pos["tree"]["comp"][0]["step"]["pos"] = json::array({0, 0, 0, 0});
    EXPECT_FALSE(verify_certificate(wrong_pos).is_ok());

    json wrong_claim = good;
    wrong_claim["tgt"] = "(refl (const a))";
    Verdict v = verify_certificate(wrong_claim);
    ASSERT_FALSE(v);
    EXPECT_EQ(v.failure().kind, Failure::Kind::BadBoundary);

    json garbage = {{"kind", "cell2"}, {"tree", {{"frob", 1}}}};
    EXPECT_FALSE(verify_certificate(garbage).is_ok());
    EXPECT_FALSE(verify_certificate(json::parse("{\"kind\": \"cell9\"}")).is_ok());
}

TEST(Certificate, CellKindsAreChecked) {
    auto [a, b] = CellGen(2).parallel3();
    json c = certificate(chiN(4, a, b));
    EXPECT_EQ(c["kind"], "cellN");
    EXPECT_EQ(c["dim"], 4);
    json lying = c;
    lying["dim"] = 5;
    EXPECT_FALSE(verify_certificate(lying).is_ok());
    json c3 = certificate(a);
    EXPECT_EQ(c3["kind"], "cell3");
    auto [d1, d2] = c3_boundary(a);
    ASSERT_NE(d1, d2);
    c3["tree"] = tree_to_json(Cell::refl(d1));
    EXPECT_FALSE(verify_certificate(c3).is_ok());  // claimed boundary no longer matches
}
