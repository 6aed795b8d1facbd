#include "cpaths/expr.hpp"

#include <algorithm>
#include <cctype>

#include "cpaths/error.hpp"

namespace cpaths {

namespace {

void require_identifier(const std::string& name) {
    if (!is_identifier(name)) throw InvalidIdentifier("invalid identifier '" + name + "'");
}

// Index of `name` counted from the innermost binder, or -1 when free.
int binder_index(const std::vector<const std::string*>& scope, const std::string& name) {
    for (std::size_t i = scope.size(); i-- > 0;) {
        if (*scope[i] == name) return static_cast<int>(scope.size() - 1 - i);
    }
    return -1;
}

bool alpha_eq_in(const Expr& a, const Expr& b, std::vector<const std::string*>& sa,
                 std::vector<const std::string*>& sb) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Expr::Kind::Var: {
            const int ia = binder_index(sa, a.name());
            const int ib = binder_index(sb, b.name());
            if (ia != ib) return false;
            return ia >= 0 || a.name() == b.name();
        }
        case Expr::Kind::Const:
            return a.name() == b.name();
        case Expr::Kind::Lam: {
            if (sa.empty() && a.same_node(b)) return true;
            sa.push_back(&a.name());
            sb.push_back(&b.name());
            const bool eq = alpha_eq_in(a.body(), b.body(), sa, sb);
            sa.pop_back();
            sb.pop_back();
            return eq;
        }
        case Expr::Kind::App:
            return alpha_eq_in(a.fun(), b.fun(), sa, sb) && alpha_eq_in(a.arg(), b.arg(), sa, sb);
    }
    return false;
}

void collect_free(const Expr& e, std::vector<std::string>& bound, std::set<std::string>& out) {
    switch (e.kind()) {
        case Expr::Kind::Var:
            if (std::find(bound.begin(), bound.end(), e.name()) == bound.end()) out.insert(e.name());
            return;
        case Expr::Kind::Const:
            return;
        case Expr::Kind::Lam:
            bound.push_back(e.name());
            collect_free(e.body(), bound, out);
            bound.pop_back();
            return;
        case Expr::Kind::App:
            collect_free(e.fun(), bound, out);
            collect_free(e.arg(), bound, out);
            return;
    }
}

void key_into(const Expr& e, std::vector<const std::string*>& scope, std::string& out) {
    switch (e.kind()) {
        case Expr::Kind::Var: {
            const int i = binder_index(scope, e.name());
            if (i >= 0) {
                out += '#';
                out += std::to_string(i);
            } else {
                out += "v:";
                out += e.name();
            }
            out += ' ';
            return;
        }
        case Expr::Kind::Const:
            out += "c:";
            out += e.name();
            out += ' ';
            return;
        case Expr::Kind::Lam:
            out += "(L ";
            scope.push_back(&e.name());
            key_into(e.body(), scope, out);
            scope.pop_back();
            out += ") ";
            return;
        case Expr::Kind::App:
            out += "(A ";
            key_into(e.fun(), scope, out);
            key_into(e.arg(), scope, out);
            out += ") ";
            return;
    }
}

}  // namespace

Expr Expr::var(std::string name) {
    require_identifier(name);
    return Expr(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}, {}, 1, 1}));
}

Expr Expr::constant(std::string name) {
    require_identifier(name);
    return Expr(std::make_shared<const Node>(Node{Kind::Const, std::move(name), {}, {}, 1, 1}));
}

Expr Expr::lam(std::string binder, Expr body) {
    require_identifier(binder);
    const std::size_t size = 1 + body.size();
    const std::size_t depth = 1 + body.depth();
    return Expr(std::make_shared<const Node>(
        Node{Kind::Lam, std::move(binder), std::move(body), {}, size, depth}));
}

Expr Expr::app(Expr fun, Expr arg) {
    const std::size_t size = 1 + fun.size() + arg.size();
    const std::size_t depth = 1 + std::max(fun.depth(), arg.depth());
    return Expr(std::make_shared<const Node>(
        Node{Kind::App, {}, std::move(fun), std::move(arg), size, depth}));
}

Expr::Kind Expr::kind() const noexcept { return node_->kind; }

const std::string& Expr::name() const {
    if (node_->kind == Kind::App) throw std::logic_error("Expr::name() on an application");
    return node_->name;
}

const Expr& Expr::body() const {
    if (node_->kind != Kind::Lam) throw std::logic_error("Expr::body() on a non-lambda");
    return node_->a;
}

const Expr& Expr::fun() const {
    if (node_->kind != Kind::App) throw std::logic_error("Expr::fun() on a non-application");
    return node_->a;
}

const Expr& Expr::arg() const {
    if (node_->kind != Kind::App) throw std::logic_error("Expr::arg() on a non-application");
    return node_->b;
}

std::size_t Expr::size() const noexcept { return node_->size; }
std::size_t Expr::depth() const noexcept { return node_->depth; }

bool operator==(const Expr& a, const Expr& b) { return alpha_eq(a, b); }

bool alpha_eq(const Expr& a, const Expr& b) {
    if (a.same_node(b)) return true;
    std::vector<const std::string*> sa;
    std::vector<const std::string*> sb;
    return alpha_eq_in(a, b, sa, sb);
}

bool identical(const Expr& a, const Expr& b) {
    if (a.same_node(b)) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Expr::Kind::Var:
        case Expr::Kind::Const:
            return a.name() == b.name();
        case Expr::Kind::Lam:
            return a.name() == b.name() && identical(a.body(), b.body());
        case Expr::Kind::App:
            return identical(a.fun(), b.fun()) && identical(a.arg(), b.arg());
    }
    return false;
}

std::string debruijn_key(const Expr& e) {
    std::string out;
    std::vector<const std::string*> scope;
    key_into(e, scope, out);
    return out;
}

std::set<std::string> free_vars(const Expr& e) {
    std::set<std::string> out;
    std::vector<std::string> bound;
    collect_free(e, bound, out);
    return out;
}

bool occurs_free(const std::string& name, const Expr& e) {
    switch (e.kind()) {
        case Expr::Kind::Var: return e.name() == name;
        case Expr::Kind::Const: return false;
        case Expr::Kind::Lam: return e.name() != name && occurs_free(name, e.body());
        case Expr::Kind::App: return occurs_free(name, e.fun()) || occurs_free(name, e.arg());
    }
    return false;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
    // strip an existing numeric suffix so repeated renaming stays short
    std::string stem = base;
    while (stem.size() > 1 && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
    for (unsigned k = 1;; ++k) {
        std::string candidate = stem + std::to_string(k);
        if (!avoid.count(candidate)) return candidate;
    }
}

Expr subst(const Expr& body, const std::string& var, const Expr& value) {
    switch (body.kind()) {
        case Expr::Kind::Var:
            return body.name() == var ? value : body;
        case Expr::Kind::Const:
            return body;
        case Expr::Kind::App: {
            Expr f = subst(body.fun(), var, value);
            Expr a = subst(body.arg(), var, value);
            if (f.same_node(body.fun()) && a.same_node(body.arg())) return body;
            return Expr::app(std::move(f), std::move(a));
        }
        case Expr::Kind::Lam: {
            const std::string& binder = body.name();
            if (binder == var || !occurs_free(var, body.body())) return body;
            if (occurs_free(binder, value)) {
                std::set<std::string> avoid = free_vars(value);
                const auto inner = free_vars(body.body());
                avoid.insert(inner.begin(), inner.end());
                avoid.insert(var);
                const std::string renamed = fresh_name(binder, avoid);
                const Expr moved = subst(body.body(), binder, Expr::var(renamed));
                return Expr::lam(renamed, subst(moved, var, value));
            }
            return Expr::lam(binder, subst(body.body(), var, value));
        }
    }
    return body;
}

bool is_beta_redex(const Expr& e) noexcept { return e.is_app() && e.fun().is_lam(); }

bool is_eta_redex(const Expr& e) {
    if (!e.is_lam()) return false;
    const Expr& b = e.body();
    return b.is_app() && b.arg().is_var() && b.arg().name() == e.name() &&
           !occurs_free(e.name(), b.fun());
}

Expr beta_contract(const Expr& e) {
    if (!is_beta_redex(e)) throw NotARedex("not a beta-redex");
    const Expr& lam = e.fun();
    return subst(lam.body(), lam.name(), e.arg());
}

Expr eta_contract(const Expr& e) {
    if (!is_eta_redex(e)) throw NotARedex("not an eta-redex");
    return e.body().fun();
}

const Expr& subexpr_at(const Expr& e, const ExprPos& pos) {
    const Expr* cur = &e;
    for (ExprSel sel : pos) {
        switch (sel) {
            case ExprSel::Fun:
                if (!cur->is_app()) throw InvalidPosition("fun selector on a non-application");
                cur = &cur->fun();
                break;
            case ExprSel::Arg:
                if (!cur->is_app()) throw InvalidPosition("arg selector on a non-application");
                cur = &cur->arg();
                break;
            case ExprSel::Body:
                if (!cur->is_lam()) throw InvalidPosition("body selector on a non-lambda");
                cur = &cur->body();
                break;
        }
    }
    return *cur;
}

namespace {

Expr replace_from(const Expr& e, const ExprPos& pos, std::size_t i, const Expr& sub) {
    if (i == pos.size()) return sub;
    switch (pos[i]) {
        case ExprSel::Fun:
            if (!e.is_app()) throw InvalidPosition("fun selector on a non-application");
            return Expr::app(replace_from(e.fun(), pos, i + 1, sub), e.arg());
        case ExprSel::Arg:
            if (!e.is_app()) throw InvalidPosition("arg selector on a non-application");
            return Expr::app(e.fun(), replace_from(e.arg(), pos, i + 1, sub));
        case ExprSel::Body:
            if (!e.is_lam()) throw InvalidPosition("body selector on a non-lambda");
            return Expr::lam(e.name(), replace_from(e.body(), pos, i + 1, sub));
    }
    throw InvalidPosition("bad selector");
}

}  // namespace

Expr replace_subexpr(const Expr& e, const ExprPos& pos, const Expr& sub) {
    return replace_from(e, pos, 0, sub);
}

bool is_identifier(const std::string& s) noexcept {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin() + 1, s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    });
}

}  // namespace cpaths
