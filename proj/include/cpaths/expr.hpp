#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace cpaths {

/// Untyped lambda term with constants. Values are immutable and share
/// structure; copying an Expr is a reference-count bump.
///
/// `operator==` is alpha-equivalence. Use `identical` for raw syntax.
class Expr {
public:
    enum class Kind : std::uint8_t { Var, Const, Lam, App };

    static Expr var(std::string name);
    static Expr constant(std::string name);
    static Expr lam(std::string binder, Expr body);
    static Expr app(Expr fun, Expr arg);

    Kind kind() const noexcept;
    bool is_var() const noexcept { return kind() == Kind::Var; }
    bool is_const() const noexcept { return kind() == Kind::Const; }
    bool is_lam() const noexcept { return kind() == Kind::Lam; }
    bool is_app() const noexcept { return kind() == Kind::App; }

    /// Variable or constant name, or the binder of a lambda.
    const std::string& name() const;
    const Expr& body() const;
    const Expr& fun() const;
    const Expr& arg() const;

    std::size_t size() const noexcept;
    std::size_t depth() const noexcept;

    friend bool operator==(const Expr& a, const Expr& b);
    friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

    bool same_node(const Expr& other) const noexcept { return node_ == other.node_; }

private:
    struct Node;
    Expr() = default;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

enum class ExprSel : std::uint8_t { Fun, Arg, Body };
using ExprPos = std::vector<ExprSel>;

bool alpha_eq(const Expr& a, const Expr& b);
bool identical(const Expr& a, const Expr& b);

/// Nameless rendering: bound variables become binder depths, free names
/// stay. Two terms are alpha-equivalent iff their keys are equal.
std::string debruijn_key(const Expr& e);

std::set<std::string> free_vars(const Expr& e);
bool occurs_free(const std::string& name, const Expr& e);

/// `base` followed by the smallest positive counter not in `avoid`.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

/// Capture-avoiding substitution body[value/var].
Expr subst(const Expr& body, const std::string& var, const Expr& value);

bool is_beta_redex(const Expr& e) noexcept;
bool is_eta_redex(const Expr& e);

/// (lam x M) N  ->  M[N/x]. Throws NotARedex.
Expr beta_contract(const Expr& e);
/// (lam x (M x)) -> M when x is not free in M. Throws NotARedex.
Expr eta_contract(const Expr& e);

/// Subterm at `pos`; throws InvalidPosition.
const Expr& subexpr_at(const Expr& e, const ExprPos& pos);
/// `e` with the subterm at `pos` replaced; throws InvalidPosition.
Expr replace_subexpr(const Expr& e, const ExprPos& pos, const Expr& sub);

bool is_identifier(const std::string& s) noexcept;

// ----------------------------------------------------------------------------

struct Expr::Node {
    Kind kind;
    std::string name;
    Expr a;  // body (Lam) or fun (App)
    Expr b;  // arg (App)
    std::size_t size;
    std::size_t depth;
};

}  // namespace cpaths
