#pragma once

#include "cpaths/expr.hpp"
#include "cpaths/path.hpp"

namespace t {

using cpaths::Expr;
using cpaths::Path;

inline Expr V(const char* x) { return Expr::var(x); }
inline Expr C(const char* c) { return Expr::constant(c); }
inline Expr L(const char* x, Expr b) { return Expr::lam(x, std::move(b)); }
inline Expr A(Expr f, Expr a) { return Expr::app(std::move(f), std::move(a)); }

inline Expr id_x() { return L("x", V("x")); }
/// (lam x x) a : a beta redex reducing to a
inline Expr redex_a() { return A(id_x(), C("a")); }

/// (lam x. (lam y. y x) (lam w. z w)) v
inline Expr worked_start() {
    return A(L("x", A(L("y", A(V("y"), V("x"))), L("w", A(C("z"), V("w"))))), C("v"));
}

/// eta inside the lambda, then two betas: (lam x. (lam y. y x) z) v -> (lam y. y v) z -> z v
inline Path worked_path() {
    Path eta_step =
        Path::nu(Path::xi("x", Path::mu(L("y", A(V("y"), V("x"))), Path::eta(L("w", A(C("z"), V("w")))))), C("v"));
    Path beta1 = Path::beta(A(L("x", A(L("y", A(V("y"), V("x"))), C("z"))), C("v")));
    Path beta2 = Path::beta(A(L("y", A(V("y"), C("v"))), C("z")));
    return Path::trans(eta_step, Path::trans(beta1, beta2));
}

}  // namespace t
