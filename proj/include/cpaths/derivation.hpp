#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>

#include "cpaths/error.hpp"
#include "cpaths/path.hpp"
#include "cpaths/trs.hpp"

namespace cpaths {

/// A 2-cell: an explicit witness that two parallel paths are rewrite
/// equivalent. Built from reflexivity, single steps, inverses and vertical
/// composition. Composition is kept as written; nothing is reassociated.
///
/// Source and target are computed structurally on construction, so they are
/// total even for derivations that fail `verify`.
class Derivation {
public:
    enum class Kind : std::uint8_t { Refl, Step, Inv, Comp };

    static Derivation refl(Path p);
    static Derivation step(StepWitness s);
    static Derivation inv(Derivation d);
    static Derivation comp(Derivation first, Derivation second);

    Kind kind() const noexcept;
    bool is(Kind k) const noexcept { return kind() == k; }

    const Path& path() const;               // Refl
    const StepWitness& witness() const;     // Step
    const Derivation& sub() const;          // Inv
    const Derivation& first() const;        // Comp
    const Derivation& second() const;       // Comp

    const Path& src() const noexcept;
    const Path& tgt() const noexcept;

    std::size_t size() const noexcept;

    friend bool operator==(const Derivation& a, const Derivation& b);
    friend bool operator!=(const Derivation& a, const Derivation& b) { return !(a == b); }

    bool same_node(const Derivation& other) const noexcept { return node_ == other.node_; }

    struct Node;

private:
    Derivation() = default;
    explicit Derivation(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

inline const Path& d_src(const Derivation& d) { return d.src(); }
inline const Path& d_tgt(const Derivation& d) { return d.tgt(); }

/// Re-checks every step against the rewrite engine and every composition
/// for chaining. Positions are child indices into the derivation tree
/// (inv: 0; comp: 0 and 1).
Verdict verify(const Derivation& d);

/// True when both boundary paths run between the same two expressions.
bool globular_check(const Derivation& d);

/// Right-nested composite of the trace's steps; refl on an empty trace.
/// Throws IllFormed if the trace does not chain.
Derivation from_trace(const Trace& trace);

/// Normalising derivation: from `p` to its normal form.
Derivation delta(const Path& p, std::size_t fuel = kDefaultFuel,
                 const RuleSet& rules = RuleSet::standard());

/// Canonical derivation delta(p) . inv(delta(q)), factoring through the
/// shared normal form. Throws NotEquivalent when the normal forms differ.
Derivation gamma(const Path& p, const Path& q, std::size_t fuel = kDefaultFuel,
                 const RuleSet& rules = RuleSet::standard());

enum class Side : std::uint8_t { Left, Right };

/// Right: every boundary path becomes trans(_, fixed). Left: trans(fixed, _).
/// Step positions are shifted into the trans context. Throws IllFormed when
/// the endpoints do not compose.
Derivation whisker2(Side side, const Path& fixed, const Derivation& d);

/// alpha : f => f' and beta : g => g' with f, f' : a -> b and g, g' : b -> c.
/// Result runs trans(f, g) => trans(f', g'):
///   whisker2(Right, g, alpha) . whisker2(Left, f', beta)
Derivation hcomp2(const Derivation& alpha, const Derivation& beta);
/// The other order: whisker2(Left, f, beta) . whisker2(Right, g', alpha).
Derivation hcomp2_alt(const Derivation& alpha, const Derivation& beta);

enum class GroupoidLaw : std::uint8_t { Assoc, LUnit, RUnit, LInv, RInv, InvInv };

const char* law_name(GroupoidLaw law) noexcept;
std::optional<GroupoidLaw> law_from_name(std::string_view name) noexcept;
/// Number of arguments the law takes (3 for assoc, 1 otherwise).
int law_arity(GroupoidLaw law) noexcept;

/// One-step coherence witness for a groupoid law on paths:
///   assoc  trans(trans(p,q),r) => trans(p,trans(q,r))   TT
///   lunit  trans(refl, p) => p                          TLR
///   runit  trans(p, refl) => p                          TRR
///   linv   trans(symm p, p) => refl                     TSR
///   rinv   trans(p, symm p) => refl                     TR
///   invinv symm(symm p) => p                            SS
Derivation witness2(GroupoidLaw law, std::span<const Path> args);

Derivation assoc2(const Path& p, const Path& q, const Path& r);
Derivation lunit2(const Path& p);
Derivation runit2(const Path& p);

// ----------------------------------------------------------------------------

struct Derivation::Node {
    Kind kind;
    std::optional<Path> path;
    std::optional<StepWitness> step;
    Derivation a;
    Derivation b;
    std::optional<Path> src;
    std::optional<Path> tgt;
    std::size_t size = 1;
};

}  // namespace cpaths
