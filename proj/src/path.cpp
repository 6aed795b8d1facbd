#include "cpaths/path.hpp"

#include <algorithm>

namespace cpaths {

Path Path::make(Node n) {
    auto fail = [&n](PathPos pos, std::string reason) {
        n.src.reset();
        n.tgt.reset();
        n.error_pos = std::move(pos);
        n.error_reason = std::move(reason);
    };
    // Propagates a child failure, prefixing the child index.
    auto child_failed = [&](const Path& c, int index) {
        if (c.well_formed()) return false;
        PathPos pos{index};
        pos.insert(pos.end(), c.node_->error_pos.begin(), c.node_->error_pos.end());
        fail(std::move(pos), c.node_->error_reason);
        return true;
    };

    switch (n.kind) {
        case Kind::Refl:
            n.src = n.expr;
            n.tgt = n.expr;
            break;
        case Kind::Beta:
            if (!is_beta_redex(*n.expr)) {
                fail({}, "beta step on a term that is not a beta-redex");
            } else {
                n.src = n.expr;
                n.tgt = beta_contract(*n.expr);
            }
            break;
        case Kind::Eta:
            if (!is_eta_redex(*n.expr)) {
                fail({}, "eta step on a term that is not an eta-redex");
            } else {
                n.src = n.expr;
                n.tgt = eta_contract(*n.expr);
            }
            break;
        case Kind::Symm:
            n.size = 1 + n.a.size();
            n.depth = 1 + n.a.depth();
            if (!child_failed(n.a, 0)) {
                n.src = n.a.node_->tgt;
                n.tgt = n.a.node_->src;
            }
            break;
        case Kind::Trans:
            n.size = 1 + n.a.size() + n.b.size();
            n.depth = 1 + std::max(n.a.depth(), n.b.depth());
            if (child_failed(n.a, 0) || child_failed(n.b, 1)) break;
            if (!alpha_eq(*n.a.node_->tgt, *n.b.node_->src)) {
                fail({}, "trans: target of the left path does not match source of the right path");
            } else {
                n.src = n.a.node_->src;
                n.tgt = n.b.node_->tgt;
            }
            break;
        case Kind::Xi:
            n.size = 1 + n.a.size();
            n.depth = 1 + n.a.depth();
            if (!child_failed(n.a, 0)) {
                n.src = Expr::lam(n.binder, *n.a.node_->src);
                n.tgt = Expr::lam(n.binder, *n.a.node_->tgt);
            }
            break;
        case Kind::Nu:
            n.size = 1 + n.a.size();
            n.depth = 1 + n.a.depth();
            if (!child_failed(n.a, 0)) {
                n.src = Expr::app(*n.a.node_->src, *n.expr);
                n.tgt = Expr::app(*n.a.node_->tgt, *n.expr);
            }
            break;
        case Kind::Mu:
            n.size = 1 + n.a.size();
            n.depth = 1 + n.a.depth();
            if (!child_failed(n.a, 0)) {
                n.src = Expr::app(*n.expr, *n.a.node_->src);
                n.tgt = Expr::app(*n.expr, *n.a.node_->tgt);
            }
            break;
    }
    return Path(std::make_shared<const Node>(std::move(n)));
}

Path Path::refl(Expr e) {
    Node n{};
    n.kind = Kind::Refl;
    n.expr = std::move(e);
    return make(std::move(n));
}

Path Path::symm(Path p) {
    Node n{};
    n.kind = Kind::Symm;
    n.a = std::move(p);
    return make(std::move(n));
}

Path Path::trans(Path p, Path q) {
    Node n{};
    n.kind = Kind::Trans;
    n.a = std::move(p);
    n.b = std::move(q);
    return make(std::move(n));
}

Path Path::beta(Expr redex) {
    Node n{};
    n.kind = Kind::Beta;
    n.expr = std::move(redex);
    return make(std::move(n));
}

Path Path::eta(Expr redex) {
    Node n{};
    n.kind = Kind::Eta;
    n.expr = std::move(redex);
    return make(std::move(n));
}

Path Path::xi(std::string binder, Path p) {
    if (!is_identifier(binder)) throw InvalidIdentifier("invalid binder '" + binder + "'");
    Node n{};
    n.kind = Kind::Xi;
    n.binder = std::move(binder);
    n.a = std::move(p);
    return make(std::move(n));
}

Path Path::nu(Path p, Expr arg) {
    Node n{};
    n.kind = Kind::Nu;
    n.a = std::move(p);
    n.expr = std::move(arg);
    return make(std::move(n));
}

Path Path::mu(Expr fun, Path p) {
    Node n{};
    n.kind = Kind::Mu;
    n.expr = std::move(fun);
    n.a = std::move(p);
    return make(std::move(n));
}

Path::Kind Path::kind() const noexcept { return node_->kind; }

const Expr& Path::expr() const {
    if (!node_->expr) throw std::logic_error("Path::expr() on a node without a term");
    return *node_->expr;
}

const std::string& Path::binder() const {
    if (node_->kind != Kind::Xi) throw std::logic_error("Path::binder() on a non-xi node");
    return node_->binder;
}

const Path& Path::sub() const {
    switch (node_->kind) {
        case Kind::Symm:
        case Kind::Xi:
        case Kind::Nu:
        case Kind::Mu:
            return node_->a;
        default:
            throw std::logic_error("Path::sub() on a node without a single child");
    }
}

const Path& Path::left() const {
    if (node_->kind != Kind::Trans) throw std::logic_error("Path::left() on a non-trans node");
    return node_->a;
}

const Path& Path::right() const {
    if (node_->kind != Kind::Trans) throw std::logic_error("Path::right() on a non-trans node");
    return node_->b;
}

int Path::arity() const noexcept {
    switch (node_->kind) {
        case Kind::Refl:
        case Kind::Beta:
        case Kind::Eta:
            return 0;
        case Kind::Trans:
            return 2;
        default:
            return 1;
    }
}

const Path& Path::child(int i) const {
    if (i < 0 || i >= arity()) throw InvalidPosition("child index " + std::to_string(i) + " out of range");
    return i == 0 ? node_->a : node_->b;
}

bool Path::well_formed() const noexcept { return node_->src.has_value(); }

const Expr& Path::src() const {
    if (!node_->src) throw IllFormed(node_->error_pos, node_->error_reason);
    return *node_->src;
}

const Expr& Path::tgt() const {
    if (!node_->tgt) throw IllFormed(node_->error_pos, node_->error_reason);
    return *node_->tgt;
}

std::size_t Path::size() const noexcept { return node_->size; }
std::size_t Path::depth() const noexcept { return node_->depth; }

bool operator==(const Path& a, const Path& b) {
    if (a.same_node(b)) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Path::Kind::Refl:
        case Path::Kind::Beta:
        case Path::Kind::Eta:
            return a.expr() == b.expr();
        case Path::Kind::Symm:
            return a.sub() == b.sub();
        case Path::Kind::Trans:
            return a.left() == b.left() && a.right() == b.right();
        case Path::Kind::Xi:
            return a.binder() == b.binder() && a.sub() == b.sub();
        case Path::Kind::Nu:
        case Path::Kind::Mu:
            return a.expr() == b.expr() && a.sub() == b.sub();
    }
    return false;
}

Endpoints endpoints(const Path& p) { return Endpoints{p.src(), p.tgt()}; }

Verdict validate(const Path& p) {
    if (p.well_formed()) return Verdict::ok();
    try {
        (void)p.src();
    } catch (const IllFormed& e) {
        return Verdict::fail(Failure::Kind::IllFormed, e.pos(), e.reason());
    }
    return Verdict::ok();
}

const Path& subpath_at(const Path& p, const PathPos& pos) {
    const Path* cur = &p;
    for (int i : pos) cur = &cur->child(i);
    return *cur;
}

bool valid_position(const Path& p, const PathPos& pos) {
    const Path* cur = &p;
    for (int i : pos) {
        if (i < 0 || i >= cur->arity()) return false;
        cur = &cur->child(i);
    }
    return true;
}

Path with_child(const Path& p, int i, Path child) {
    switch (p.kind()) {
        case Path::Kind::Symm:
            return Path::symm(std::move(child));
        case Path::Kind::Trans:
            return i == 0 ? Path::trans(std::move(child), p.right())
                          : Path::trans(p.left(), std::move(child));
        case Path::Kind::Xi:
            return Path::xi(p.binder(), std::move(child));
        case Path::Kind::Nu:
            return Path::nu(std::move(child), p.expr());
        case Path::Kind::Mu:
            return Path::mu(p.expr(), std::move(child));
        default:
            throw InvalidPosition("leaf path has no children");
    }
}

namespace {

Path replace_from(const Path& p, const PathPos& pos, std::size_t i, const Path& sub) {
    if (i == pos.size()) return sub;
    const int c = pos[i];
    if (c < 0 || c >= p.arity()) throw InvalidPosition("position " + format_pos(pos) + " is not valid");
    return with_child(p, c, replace_from(p.child(c), pos, i + 1, sub));
}

void collect_positions(const Path& p, PathPos& cur, std::vector<PathPos>& out) {
    out.push_back(cur);
    for (int i = 0; i < p.arity(); ++i) {
        cur.push_back(i);
        collect_positions(p.child(i), cur, out);
        cur.pop_back();
    }
}

void key_into(const Path& p, std::string& out) {
    switch (p.kind()) {
        case Path::Kind::Refl: out += "(refl "; out += debruijn_key(p.expr()); break;
        case Path::Kind::Beta: out += "(beta "; out += debruijn_key(p.expr()); break;
        case Path::Kind::Eta: out += "(eta "; out += debruijn_key(p.expr()); break;
        case Path::Kind::Symm: out += "(symm "; key_into(p.sub(), out); break;
        case Path::Kind::Trans:
            out += "(trans ";
            key_into(p.left(), out);
            key_into(p.right(), out);
            break;
        case Path::Kind::Xi:
            out += "(xi ";
            out += p.binder();
            out += ' ';
            key_into(p.sub(), out);
            break;
        case Path::Kind::Nu:
            out += "(nu ";
            key_into(p.sub(), out);
            out += debruijn_key(p.expr());
            break;
        case Path::Kind::Mu:
            out += "(mu ";
            out += debruijn_key(p.expr());
            key_into(p.sub(), out);
            break;
    }
    out += ')';
}

}  // namespace

Path replace_at(const Path& p, const PathPos& pos, const Path& sub) {
    Path out = replace_from(p, pos, 0, sub);
    if (!out.well_formed()) (void)out.src();  // throws IllFormed
    return out;
}

std::vector<PathPos> positions(const Path& p) {
    std::vector<PathPos> out;
    PathPos cur;
    collect_positions(p, cur, out);
    return out;
}

std::string path_key(const Path& p) {
    std::string out;
    key_into(p, out);
    return out;
}

}  // namespace cpaths
