#include "cpaths/trs.hpp"

#include "cpaths/error.hpp"

namespace cpaths {

namespace {

constexpr std::array<const char*, kRuleCount> kNames = {
    "SR",    "SS",    "TR",    "TSR",   "TRR",   "TLR",   "TT",   "STSS",  "TC_NU", "TC_MU",
    "TC_XI", "SC_NU", "SC_MU", "SC_XI", "RC_NU", "RC_MU", "RC_XI", "TR_T", "TSR_T",
};

std::optional<Path> distribute_trans(const Path& p) {
    const Path& inner = p.sub();
    if (!inner.is(Path::Kind::Trans)) return std::nullopt;
    return Path::trans(with_child(p, 0, inner.left()), with_child(p, 0, inner.right()));
}

std::optional<Path> distribute_symm(const Path& p) {
    const Path& inner = p.sub();
    if (!inner.is(Path::Kind::Symm)) return std::nullopt;
    return Path::symm(with_child(p, 0, inner.sub()));
}

std::optional<Path> collapse_refl(const Path& p) {
    const Path& inner = p.sub();
    if (!inner.is(Path::Kind::Refl)) return std::nullopt;
    // the congruence's own endpoint is exactly the collapsed term
    return Path::refl(p.src());
}

void collect(const Path& p, const RuleSet& rules, PathPos& pos, std::vector<Reduct>& out) {
    for (RuleId r : kAllRules) {
        if (!rules.contains(r)) continue;
        if (auto q = rewrite_root(p, r)) out.push_back(Reduct{pos, r, std::move(*q)});
    }
    for (int i = 0; i < p.arity(); ++i) {
        pos.push_back(i);
        const std::size_t before = out.size();
        collect(p.child(i), rules, pos, out);
        pos.pop_back();
        for (std::size_t k = before; k < out.size(); ++k) {
            out[k].result = with_child(p, i, std::move(out[k].result));
        }
    }
}

std::optional<Reduct> find_first(const Path& p, const RuleSet& rules, PathPos& pos) {
    for (RuleId r : kAllRules) {
        if (!rules.contains(r)) continue;
        if (auto q = rewrite_root(p, r)) return Reduct{pos, r, std::move(*q)};
    }
    for (int i = 0; i < p.arity(); ++i) {
        pos.push_back(i);
        auto found = find_first(p.child(i), rules, pos);
        pos.pop_back();
        if (found) {
            found->result = with_child(p, i, std::move(found->result));
            return found;
        }
    }
    return std::nullopt;
}

}  // namespace

const char* rule_name(RuleId r) noexcept { return kNames[static_cast<std::size_t>(r)]; }

std::optional<RuleId> rule_from_name(std::string_view name) noexcept {
    for (RuleId r : kAllRules) {
        if (name == rule_name(r)) return r;
    }
    return std::nullopt;
}

RuleSet RuleSet::printed() noexcept {
    RuleSet s;
    for (RuleId r : kPrintedRules) s = s.with(r);
    return s;
}

RuleSet RuleSet::printed_with_rc() noexcept {
    return printed().with(RuleId::RC_NU).with(RuleId::RC_MU).with(RuleId::RC_XI);
}

RuleSet RuleSet::standard() noexcept {
    return printed_with_rc().with(RuleId::TR_T).with(RuleId::TSR_T);
}

RuleSet RuleSet::with(RuleId r) const noexcept {
    RuleSet s = *this;
    s.bits_ |= 1U << static_cast<unsigned>(r);
    return s;
}

RuleSet RuleSet::without(RuleId r) const noexcept {
    RuleSet s = *this;
    s.bits_ &= ~(1U << static_cast<unsigned>(r));
    return s;
}

std::optional<Path> rewrite_root(const Path& p, RuleId rule) {
    using K = Path::Kind;
    switch (rule) {
        case RuleId::SR:
            if (p.is(K::Symm) && p.sub().is(K::Refl)) return p.sub();
            return std::nullopt;
        case RuleId::SS:
            if (p.is(K::Symm) && p.sub().is(K::Symm)) return p.sub().sub();
            return std::nullopt;
        case RuleId::TR:
            if (p.is(K::Trans) && p.right().is(K::Symm) && p.left() == p.right().sub()) {
                return Path::refl(p.src());
            }
            return std::nullopt;
        case RuleId::TSR:
            if (p.is(K::Trans) && p.left().is(K::Symm) && p.left().sub() == p.right()) {
                return Path::refl(p.tgt());
            }
            return std::nullopt;
        case RuleId::TRR:
            if (p.is(K::Trans) && p.right().is(K::Refl)) return p.left();
            return std::nullopt;
        case RuleId::TLR:
            if (p.is(K::Trans) && p.left().is(K::Refl)) return p.right();
            return std::nullopt;
        case RuleId::TT:
            if (p.is(K::Trans) && p.left().is(K::Trans)) {
                const Path& l = p.left();
                return Path::trans(l.left(), Path::trans(l.right(), p.right()));
            }
            return std::nullopt;
        case RuleId::STSS:
            if (p.is(K::Symm) && p.sub().is(K::Trans)) {
                const Path& t = p.sub();
                return Path::trans(Path::symm(t.right()), Path::symm(t.left()));
            }
            return std::nullopt;
        case RuleId::TC_NU:
            return p.is(K::Nu) ? distribute_trans(p) : std::nullopt;
        case RuleId::TC_MU:
            return p.is(K::Mu) ? distribute_trans(p) : std::nullopt;
        case RuleId::TC_XI:
            return p.is(K::Xi) ? distribute_trans(p) : std::nullopt;
        case RuleId::SC_NU:
            return p.is(K::Nu) ? distribute_symm(p) : std::nullopt;
        case RuleId::SC_MU:
            return p.is(K::Mu) ? distribute_symm(p) : std::nullopt;
        case RuleId::SC_XI:
            return p.is(K::Xi) ? distribute_symm(p) : std::nullopt;
        case RuleId::RC_NU:
            return p.is(K::Nu) ? collapse_refl(p) : std::nullopt;
        case RuleId::RC_MU:
            return p.is(K::Mu) ? collapse_refl(p) : std::nullopt;
        case RuleId::RC_XI:
            return p.is(K::Xi) ? collapse_refl(p) : std::nullopt;
        case RuleId::TR_T:
            if (p.is(K::Trans) && p.right().is(K::Trans) && p.right().left().is(K::Symm) &&
                p.left() == p.right().left().sub()) {
                return p.right().right();
            }
            return std::nullopt;
        case RuleId::TSR_T:
            if (p.is(K::Trans) && p.left().is(K::Symm) && p.right().is(K::Trans) &&
                p.left().sub() == p.right().left()) {
                return p.right().right();
            }
            return std::nullopt;
    }
    return std::nullopt;
}

Path apply_rule(const Path& p, const PathPos& pos, RuleId rule) {
    if (!valid_position(p, pos)) throw InvalidPosition("position " + format_pos(pos) + " is not valid");
    auto rewritten = rewrite_root(subpath_at(p, pos), rule);
    if (!rewritten) {
        throw NoMatch(std::string("rule ") + rule_name(rule) + " does not match at " + format_pos(pos));
    }
    return replace_at(p, pos, *rewritten);
}

StepWitness make_step(const Path& source, const PathPos& pos, RuleId rule) {
    return StepWitness{source, apply_rule(source, pos, rule), pos, rule};
}

std::vector<Reduct> one_step_reducts(const Path& p, const RuleSet& rules) {
    std::vector<Reduct> out;
    PathPos pos;
    collect(p, rules, pos, out);
    return out;
}

std::optional<Reduct> first_reduct(const Path& p, const RuleSet& rules) {
    PathPos pos;
    return find_first(p, rules, pos);
}

bool is_normal(const Path& p, const RuleSet& rules) { return !first_reduct(p, rules).has_value(); }

bool Trace::chained() const {
    const Path* prev = &start;
    for (const StepWitness& s : steps) {
        if (!(s.source == *prev)) return false;
        prev = &s.target;
    }
    return true;
}

Normalized normalize(const Path& p, std::size_t fuel, const RuleSet& rules) {
    (void)p.src();  // throws IllFormed
    Trace trace{p, {}};
    Path cur = p;
    while (auto r = first_reduct(cur, rules)) {
        if (trace.steps.size() == fuel) throw FuelExhausted(trace.steps.size());
        trace.steps.push_back(StepWitness{cur, r->result, std::move(r->pos), r->rule});
        cur = std::move(r->result);
    }
    return Normalized{std::move(cur), std::move(trace)};
}

bool rweq(const Path& p, const Path& q, std::size_t fuel, const RuleSet& rules) {
    if (!(p.src() == q.src()) || !(p.tgt() == q.tgt())) return false;
    return normalize(p, fuel, rules).nf == normalize(q, fuel, rules).nf;
}

}  // namespace cpaths
