#pragma once

// Independent reference implementations used as test oracles. Nothing here
// calls into the library's substitution, alpha-equivalence or endpoint code;
// terms are converted to de Bruijn form and reduced there.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cpaths/expr.hpp"
#include "cpaths/path.hpp"

namespace oracle {

struct Db;
using DbPtr = std::shared_ptr<const Db>;

struct Db {
    enum K { Bound, Free, Const, Lam, App } k;
    int idx = 0;
    std::string name;
    DbPtr a, b;
};

inline DbPtr mk(Db d) { return std::make_shared<const Db>(std::move(d)); }

inline DbPtr to_db(const cpaths::Expr& e, std::vector<std::string>& ctx) {
    using EK = cpaths::Expr::Kind;
    switch (e.kind()) {
        case EK::Var:
            for (int i = static_cast<int>(ctx.size()) - 1; i >= 0; --i) {
                if (ctx[i] == e.name()) return mk({Db::Bound, static_cast<int>(ctx.size()) - 1 - i, "", {}, {}});
            }
            return mk({Db::Free, 0, e.name(), {}, {}});
        case EK::Const:
            return mk({Db::Const, 0, e.name(), {}, {}});
        case EK::Lam: {
            ctx.push_back(e.name());
            DbPtr body = to_db(e.body(), ctx);
            ctx.pop_back();
            return mk({Db::Lam, 0, "", body, {}});
        }
        case EK::App: {
            DbPtr f = to_db(e.fun(), ctx);
            return mk({Db::App, 0, "", f, to_db(e.arg(), ctx)});
        }
    }
    return nullptr;
}

inline DbPtr to_db(const cpaths::Expr& e) {
    std::vector<std::string> ctx;
    return to_db(e, ctx);
}

inline bool eq(const DbPtr& x, const DbPtr& y) {
    if (x->k != y->k) return false;
    switch (x->k) {
        case Db::Bound: return x->idx == y->idx;
        case Db::Free:
        case Db::Const: return x->name == y->name;
        case Db::Lam: return eq(x->a, y->a);
        case Db::App: return eq(x->a, y->a) && eq(x->b, y->b);
    }
    return false;
}

inline DbPtr shift(const DbPtr& t, int d, int cutoff = 0) {
    switch (t->k) {
        case Db::Bound:
            return t->idx >= cutoff ? mk({Db::Bound, t->idx + d, "", {}, {}}) : t;
        case Db::Free:
        case Db::Const: return t;
        case Db::Lam: return mk({Db::Lam, 0, "", shift(t->a, d, cutoff + 1), {}});
        case Db::App: return mk({Db::App, 0, "", shift(t->a, d, cutoff), shift(t->b, d, cutoff)});
    }
    return t;
}

// t[j := s]
inline DbPtr subst(const DbPtr& t, int j, const DbPtr& s) {
    switch (t->k) {
        case Db::Bound: return t->idx == j ? s : t;
        case Db::Free:
        case Db::Const: return t;
        case Db::Lam: return mk({Db::Lam, 0, "", subst(t->a, j + 1, shift(s, 1)), {}});
        case Db::App: return mk({Db::App, 0, "", subst(t->a, j, s), subst(t->b, j, s)});
    }
    return t;
}

inline bool mentions(const DbPtr& t, int j) {
    switch (t->k) {
        case Db::Bound: return t->idx == j;
        case Db::Free:
        case Db::Const: return false;
        case Db::Lam: return mentions(t->a, j + 1);
        case Db::App: return mentions(t->a, j) || mentions(t->b, j);
    }
    return false;
}

inline std::optional<DbPtr> beta(const DbPtr& t) {
    if (t->k != Db::App || t->a->k != Db::Lam) return std::nullopt;
    return shift(subst(t->a->a, 0, shift(t->b, 1)), -1);
}

inline std::optional<DbPtr> eta(const DbPtr& t) {
    if (t->k != Db::Lam || t->a->k != Db::App) return std::nullopt;
    const DbPtr& body = t->a;
    if (body->b->k != Db::Bound || body->b->idx != 0 || mentions(body->a, 0)) return std::nullopt;
    return shift(body->a, -1);
}

using Ends = std::pair<DbPtr, DbPtr>;

/// Endpoints of a path computed in de Bruijn form; nullopt when ill-formed.
inline std::optional<Ends> endpoints(const cpaths::Path& p, std::vector<std::string>& ctx) {
    using PK = cpaths::Path::Kind;
    switch (p.kind()) {
        case PK::Refl: {
            DbPtr e = to_db(p.expr(), ctx);
            return Ends{e, e};
        }
        case PK::Beta: {
            DbPtr e = to_db(p.expr(), ctx);
            auto r = beta(e);
            if (!r) return std::nullopt;
            return Ends{e, *r};
        }
        case PK::Eta: {
            DbPtr e = to_db(p.expr(), ctx);
            auto r = eta(e);
            if (!r) return std::nullopt;
            return Ends{e, *r};
        }
        case PK::Symm: {
            auto s = endpoints(p.sub(), ctx);
            if (!s) return std::nullopt;
            return Ends{s->second, s->first};
        }
        case PK::Trans: {
            auto l = endpoints(p.left(), ctx);
            auto r = endpoints(p.right(), ctx);
            if (!l || !r || !eq(l->second, r->first)) return std::nullopt;
            return Ends{l->first, r->second};
        }
        case PK::Xi: {
            ctx.push_back(p.binder());
            auto s = endpoints(p.sub(), ctx);
            ctx.pop_back();
            if (!s) return std::nullopt;
            return Ends{mk({Db::Lam, 0, "", s->first, {}}), mk({Db::Lam, 0, "", s->second, {}})};
        }
        case PK::Nu: {
            auto s = endpoints(p.sub(), ctx);
            if (!s) return std::nullopt;
            DbPtr arg = to_db(p.expr(), ctx);
            return Ends{mk({Db::App, 0, "", s->first, arg}), mk({Db::App, 0, "", s->second, arg})};
        }
        case PK::Mu: {
            auto s = endpoints(p.sub(), ctx);
            if (!s) return std::nullopt;
            DbPtr fun = to_db(p.expr(), ctx);
            return Ends{mk({Db::App, 0, "", fun, s->first}), mk({Db::App, 0, "", fun, s->second})};
        }
    }
    return std::nullopt;
}

inline std::optional<Ends> endpoints(const cpaths::Path& p) {
    std::vector<std::string> ctx;
    return endpoints(p, ctx);
}

inline bool same_ends(const std::optional<Ends>& a, const std::optional<Ends>& b) {
    return a && b && eq(a->first, b->first) && eq(a->second, b->second);
}

inline bool alpha(const cpaths::Expr& x, const cpaths::Expr& y) { return eq(to_db(x), to_db(y)); }

}  // namespace oracle
