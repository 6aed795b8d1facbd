#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cpaths/path.hpp"

namespace cpaths {

/// Rewrite rules on paths, in priority order. The enumeration order is the
/// tie-break used by `one_step_reducts` and `normalize`.
///
///   SR     symm(refl a)                  -> refl a
///   SS     symm(symm r)                  -> r
///   TR     trans(r, symm r)              -> refl (src r)
///   TSR    trans(symm r, r)              -> refl (tgt r)
///   TRR    trans(r, refl)                -> r
///   TLR    trans(refl, r)                -> r
///   TT     trans(trans(r, s), t)         -> trans(r, trans(s, t))
///   STSS   symm(trans(r, s))             -> trans(symm s, symm r)
///   TC_*   C(trans(p, q))                -> trans(C(p), C(q))      C in {nu, mu, xi}
///   SC_*   C(symm p)                     -> symm(C(p))
///   RC_*   C(refl a)                     -> refl (C[a])
///   TR_T   trans(r, trans(symm r, t))    -> t
///   TSR_T  trans(symm r, trans(r, t))    -> t
enum class RuleId : std::uint8_t {
    SR,
    SS,
    TR,
    TSR,
    TRR,
    TLR,
    TT,
    STSS,
    TC_NU,
    TC_MU,
    TC_XI,
    SC_NU,
    SC_MU,
    SC_XI,
    RC_NU,
    RC_MU,
    RC_XI,
    TR_T,
    TSR_T,
};

inline constexpr std::size_t kRuleCount = 19;

inline constexpr std::array<RuleId, kRuleCount> kAllRules = {
    RuleId::SR,    RuleId::SS,    RuleId::TR,    RuleId::TSR,   RuleId::TRR,
    RuleId::TLR,   RuleId::TT,    RuleId::STSS,  RuleId::TC_NU, RuleId::TC_MU,
    RuleId::TC_XI, RuleId::SC_NU, RuleId::SC_MU, RuleId::SC_XI, RuleId::RC_NU,
    RuleId::RC_MU, RuleId::RC_XI, RuleId::TR_T,  RuleId::TSR_T,
};

/// The fourteen printed rules: SR through SC_XI.
inline constexpr std::array<RuleId, 14> kPrintedRules = {
    RuleId::SR,    RuleId::SS,    RuleId::TR,    RuleId::TSR,   RuleId::TRR,
    RuleId::TLR,   RuleId::TT,    RuleId::STSS,  RuleId::TC_NU, RuleId::TC_MU,
    RuleId::TC_XI, RuleId::SC_NU, RuleId::SC_MU, RuleId::SC_XI,
};

const char* rule_name(RuleId r) noexcept;
std::optional<RuleId> rule_from_name(std::string_view name) noexcept;

/// Which rules the search procedures may fire. `apply_rule` and step
/// verification accept every rule regardless of the set.
class RuleSet {
public:
    constexpr RuleSet() = default;

    /// The fourteen printed rules only. Not confluent on its own: see
    /// `standard()`.
    static RuleSet printed() noexcept;
    /// Printed rules plus the congruence-of-refl collapses.
    static RuleSet printed_with_rc() noexcept;
    /// Printed rules, the refl collapses and the two cancellation rules.
    /// This is the default everywhere; it is the smallest extension of the
    /// printed set under which normal forms are unique.
    static RuleSet standard() noexcept;

    bool contains(RuleId r) const noexcept { return (bits_ >> static_cast<unsigned>(r)) & 1U; }
    RuleSet with(RuleId r) const noexcept;
    RuleSet without(RuleId r) const noexcept;

    friend bool operator==(RuleSet a, RuleSet b) noexcept { return a.bits_ == b.bits_; }

private:
    std::uint32_t bits_ = 0;
};

inline constexpr std::size_t kDefaultFuel = 10000;

/// One rewrite: applying `rule` at `pos` in `source` gives `target`.
/// Equality looks at the boundary paths only, so two witnesses between the
/// same pair of paths are the same step.
struct StepWitness {
    Path source;
    Path target;
    PathPos pos;
    RuleId rule;

    friend bool operator==(const StepWitness& a, const StepWitness& b) {
        return a.source == b.source && a.target == b.target;
    }
};

/// Rewrites at the root only; nullopt when the rule's left side does not match.
std::optional<Path> rewrite_root(const Path& p, RuleId rule);

/// Throws InvalidPosition or NoMatch.
Path apply_rule(const Path& p, const PathPos& pos, RuleId rule);

/// Builds and checks a witness in one go.
StepWitness make_step(const Path& source, const PathPos& pos, RuleId rule);

struct Reduct {
    PathPos pos;
    RuleId rule;
    Path result;
};

/// Every single-step reduct, ordered by pre-order position then rule.
std::vector<Reduct> one_step_reducts(const Path& p, const RuleSet& rules = RuleSet::standard());

/// Leftmost-outermost redex, ties broken by rule order.
std::optional<Reduct> first_reduct(const Path& p, const RuleSet& rules = RuleSet::standard());

bool is_normal(const Path& p, const RuleSet& rules = RuleSet::standard());

struct Trace {
    Path start;
    std::vector<StepWitness> steps;

    const Path& end() const { return steps.empty() ? start : steps.back().target; }
    /// True when every step's source equals the previous step's target.
    bool chained() const;
};

struct Normalized {
    Path nf;
    Trace trace;
};

/// Deterministic leftmost-outermost normalisation. Throws FuelExhausted when
/// more than `fuel` steps would be needed.
Normalized normalize(const Path& p, std::size_t fuel = kDefaultFuel,
                     const RuleSet& rules = RuleSet::standard());

/// Rewrite equivalence decided by comparing normal forms.
bool rweq(const Path& p, const Path& q, std::size_t fuel = kDefaultFuel,
          const RuleSet& rules = RuleSet::standard());

}  // namespace cpaths
