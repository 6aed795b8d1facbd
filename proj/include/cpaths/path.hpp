#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "cpaths/error.hpp"
#include "cpaths/expr.hpp"

namespace cpaths {

using PathPos = TreePos;

/// A computational path: a term recording which equality rules take one
/// expression to another.
///
/// Construction never throws on bad chaining. Each node records whether it
/// is well-formed (and if not, the first offending position) so that
/// `validate` is O(1) and ill-formed inputs can still be inspected.
///
/// Child order, used by positions: symm/xi/nu/mu have the single child 0;
/// trans has 0 (left) and 1 (right).
class Path {
public:
    enum class Kind : std::uint8_t { Refl, Symm, Trans, Beta, Eta, Xi, Nu, Mu };

    static Path refl(Expr e);
    static Path symm(Path p);
    static Path trans(Path p, Path q);
    static Path beta(Expr redex);
    static Path eta(Expr redex);
    static Path xi(std::string binder, Path p);
    /// Function-position congruence: (fun-path) applied to a fixed argument.
    static Path nu(Path p, Expr arg);
    /// Argument-position congruence: a fixed function applied to (arg-path).
    static Path mu(Expr fun, Path p);

    Kind kind() const noexcept;
    bool is(Kind k) const noexcept { return kind() == k; }

    /// The term carried by refl/beta/eta, the argument of nu, or the function of mu.
    const Expr& expr() const;
    const std::string& binder() const;
    /// The single child of symm/xi/nu/mu.
    const Path& sub() const;
    const Path& left() const;
    const Path& right() const;

    int arity() const noexcept;
    const Path& child(int i) const;

    bool well_formed() const noexcept;
    /// Throws IllFormed carrying the first violating position.
    const Expr& src() const;
    const Expr& tgt() const;

    std::size_t size() const noexcept;
    std::size_t depth() const noexcept;

    /// Structural equality; embedded expressions compared up to alpha.
    friend bool operator==(const Path& a, const Path& b);
    friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }

    bool same_node(const Path& other) const noexcept { return node_ == other.node_; }

    struct Node;

private:
    Path() = default;
    explicit Path(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Path make(Node node);
    std::shared_ptr<const Node> node_;
};

struct Endpoints {
    Expr src;
    Expr tgt;
};

Endpoints endpoints(const Path& p);
Verdict validate(const Path& p);

/// Throws InvalidPosition.
const Path& subpath_at(const Path& p, const PathPos& pos);
bool valid_position(const Path& p, const PathPos& pos);
/// Replaces the subpath at `pos`. Throws InvalidPosition, or IllFormed when
/// the result no longer chains.
Path replace_at(const Path& p, const PathPos& pos, const Path& sub);
/// Same node kind and payload with child `i` swapped; no well-formedness check.
Path with_child(const Path& p, int i, Path child);

/// Pre-order list of every position in `p`.
std::vector<PathPos> positions(const Path& p);

/// Hashable rendering that is equal for structurally equal paths.
std::string path_key(const Path& p);

struct PathKeyHash {
    std::size_t operator()(const Path& p) const { return std::hash<std::string>{}(path_key(p)); }
};

// ----------------------------------------------------------------------------

struct Path::Node {
    Kind kind;
    std::optional<Expr> expr;
    std::string binder;
    Path a;
    Path b;
    std::size_t size = 1;
    std::size_t depth = 1;
    // derived on construction
    std::optional<Expr> src;
    std::optional<Expr> tgt;
    PathPos error_pos;
    std::string error_reason;
};

}  // namespace cpaths
