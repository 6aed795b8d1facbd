#include "cpaths/derivation.hpp"

#include <array>

namespace cpaths {

namespace {

using K = Derivation::Kind;

bool same_endpoints(const Path& a, const Path& b) {
    if (!a.well_formed() || !b.well_formed()) return false;
    return a.src() == b.src() && a.tgt() == b.tgt();
}

Verdict verify_at(const Derivation& d, TreePos& pos) {
    switch (d.kind()) {
        case K::Refl: {
            Verdict v = validate(d.path());
            if (!v) return Verdict::fail(Failure::Kind::IllFormed, pos, "refl: " + v.describe());
            return Verdict::ok();
        }
        case K::Step: {
            const StepWitness& s = d.witness();
            if (!s.source.well_formed()) {
                return Verdict::fail(Failure::Kind::BadStep, pos, "step source is ill-formed");
            }
            try {
                Path got = apply_rule(s.source, s.pos, s.rule);
                if (got != s.target) {
                    return Verdict::fail(Failure::Kind::BadStep, pos,
                                         std::string(rule_name(s.rule)) + " at " + format_pos(s.pos) +
                                             " does not produce the recorded target");
                }
            } catch (const Error& e) {
                return Verdict::fail(Failure::Kind::BadStep, pos, e.what());
            }
            return Verdict::ok();
        }
        case K::Inv: {
            pos.push_back(0);
            Verdict v = verify_at(d.sub(), pos);
            pos.pop_back();
            return v;
        }
        case K::Comp: {
            for (int i = 0; i < 2; ++i) {
                pos.push_back(i);
                Verdict v = verify_at(i == 0 ? d.first() : d.second(), pos);
                pos.pop_back();
                if (!v) return v;
            }
            if (d.first().tgt() != d.second().src()) {
                return Verdict::fail(Failure::Kind::BadChain, pos, "composite does not chain");
            }
            return Verdict::ok();
        }
    }
    return Verdict::ok();
}

PathPos prefixed(int head, const PathPos& pos) {
    PathPos out;
    out.reserve(pos.size() + 1);
    out.push_back(head);
    out.insert(out.end(), pos.begin(), pos.end());
    return out;
}

Derivation whisker_map(Side side, const Path& fixed, const Derivation& d) {
    auto wrap = [&](const Path& p) {
        return side == Side::Right ? Path::trans(p, fixed) : Path::trans(fixed, p);
    };
    switch (d.kind()) {
        case K::Refl:
            return Derivation::refl(wrap(d.path()));
        case K::Step: {
            const StepWitness& s = d.witness();
            return Derivation::step(StepWitness{wrap(s.source), wrap(s.target),
                                                prefixed(side == Side::Right ? 0 : 1, s.pos), s.rule});
        }
        case K::Inv:
            return Derivation::inv(whisker_map(side, fixed, d.sub()));
        case K::Comp:
            return Derivation::comp(whisker_map(side, fixed, d.first()),
                                    whisker_map(side, fixed, d.second()));
    }
    throw Error("unreachable");
}

Derivation root_step(const Path& source, RuleId rule) {
    (void)source.src();  // IllFormed when the arguments do not compose
    return Derivation::step(make_step(source, {}, rule));
}

constexpr std::array<const char*, 6> kLawNames = {"assoc", "lunit", "runit", "linv", "rinv", "invinv"};

}  // namespace

// ---------------------------------------------------------------- Derivation

Derivation Derivation::refl(Path p) {
    Node n{};
    n.kind = Kind::Refl;
    n.src = p;
    n.tgt = p;
    n.path = std::move(p);
    return Derivation(std::make_shared<const Node>(std::move(n)));
}

Derivation Derivation::step(StepWitness s) {
    Node n{};
    n.kind = Kind::Step;
    n.src = s.source;
    n.tgt = s.target;
    n.step = std::move(s);
    return Derivation(std::make_shared<const Node>(std::move(n)));
}

Derivation Derivation::inv(Derivation d) {
    Node n{};
    n.kind = Kind::Inv;
    n.src = d.tgt();
    n.tgt = d.src();
    n.size = d.size() + 1;
    n.a = std::move(d);
    return Derivation(std::make_shared<const Node>(std::move(n)));
}

Derivation Derivation::comp(Derivation first, Derivation second) {
    Node n{};
    n.kind = Kind::Comp;
    n.src = first.src();
    n.tgt = second.tgt();
    n.size = first.size() + second.size() + 1;
    n.a = std::move(first);
    n.b = std::move(second);
    return Derivation(std::make_shared<const Node>(std::move(n)));
}

Derivation::Kind Derivation::kind() const noexcept { return node_->kind; }

const Path& Derivation::path() const {
    if (kind() != Kind::Refl) throw Error("derivation is not refl");
    return *node_->path;
}

const StepWitness& Derivation::witness() const {
    if (kind() != Kind::Step) throw Error("derivation is not a step");
    return *node_->step;
}

const Derivation& Derivation::sub() const {
    if (kind() != Kind::Inv) throw Error("derivation is not inv");
    return node_->a;
}

const Derivation& Derivation::first() const {
    if (kind() != Kind::Comp) throw Error("derivation is not a composite");
    return node_->a;
}

const Derivation& Derivation::second() const {
    if (kind() != Kind::Comp) throw Error("derivation is not a composite");
    return node_->b;
}

const Path& Derivation::src() const noexcept { return *node_->src; }
const Path& Derivation::tgt() const noexcept { return *node_->tgt; }
std::size_t Derivation::size() const noexcept { return node_->size; }

bool operator==(const Derivation& a, const Derivation& b) {
    if (a.same_node(b)) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case K::Refl:
            return a.path() == b.path();
        case K::Step:
            return a.witness() == b.witness();
        case K::Inv:
            return a.sub() == b.sub();
        case K::Comp:
            return a.first() == b.first() && a.second() == b.second();
    }
    return false;
}

// ---------------------------------------------------------------- checks

Verdict verify(const Derivation& d) {
    TreePos pos;
    Verdict v = verify_at(d, pos);
    if (!v) return v;
    if (!globular_check(d)) {
        return Verdict::fail(Failure::Kind::BadBoundary, {}, "boundary paths are not parallel");
    }
    return v;
}

bool globular_check(const Derivation& d) { return same_endpoints(d.src(), d.tgt()); }

// ---------------------------------------------------------------- builders

Derivation from_trace(const Trace& trace) {
    const Path* prev = &trace.start;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        if (trace.steps[i].source != *prev) {
            throw IllFormed({static_cast<int>(i)}, "trace does not chain at step " + std::to_string(i));
        }
        prev = &trace.steps[i].target;
    }
    if (trace.steps.empty()) return Derivation::refl(trace.start);
    Derivation acc = Derivation::step(trace.steps.back());
    for (std::size_t i = trace.steps.size() - 1; i-- > 0;) {
        acc = Derivation::comp(Derivation::step(trace.steps[i]), std::move(acc));
    }
    return acc;
}

Derivation delta(const Path& p, std::size_t fuel, const RuleSet& rules) {
    return from_trace(normalize(p, fuel, rules).trace);
}

Derivation gamma(const Path& p, const Path& q, std::size_t fuel, const RuleSet& rules) {
    if (!same_endpoints(p, q)) throw NotEquivalent("paths are not parallel");
    Normalized np = normalize(p, fuel, rules);
    Normalized nq = normalize(q, fuel, rules);
    if (np.nf != nq.nf) throw NotEquivalent("normal forms differ");
    return Derivation::comp(from_trace(np.trace), Derivation::inv(from_trace(nq.trace)));
}

Derivation whisker2(Side side, const Path& fixed, const Derivation& d) {
    const Expr& fixed_end = side == Side::Right ? fixed.src() : fixed.tgt();
    const Expr& d_end = side == Side::Right ? d.src().tgt() : d.src().src();
    if (fixed_end != d_end) {
        throw IllFormed({}, side == Side::Right ? "whisker: derivation target does not meet the fixed path"
                                                : "whisker: fixed path does not meet the derivation source");
    }
    return whisker_map(side, fixed, d);
}

Derivation hcomp2(const Derivation& alpha, const Derivation& beta) {
    return Derivation::comp(whisker2(Side::Right, beta.src(), alpha), whisker2(Side::Left, alpha.tgt(), beta));
}

Derivation hcomp2_alt(const Derivation& alpha, const Derivation& beta) {
    return Derivation::comp(whisker2(Side::Left, alpha.src(), beta), whisker2(Side::Right, beta.tgt(), alpha));
}

// ---------------------------------------------------------------- laws

const char* law_name(GroupoidLaw law) noexcept { return kLawNames[static_cast<std::size_t>(law)]; }

std::optional<GroupoidLaw> law_from_name(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kLawNames.size(); ++i) {
        if (name == kLawNames[i]) return static_cast<GroupoidLaw>(i);
    }
    return std::nullopt;
}

int law_arity(GroupoidLaw law) noexcept { return law == GroupoidLaw::Assoc ? 3 : 1; }

Derivation witness2(GroupoidLaw law, std::span<const Path> args) {
    if (static_cast<int>(args.size()) != law_arity(law)) {
        throw IllFormed({}, std::string(law_name(law)) + " takes " + std::to_string(law_arity(law)) +
                                " path(s)");
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (!args[i].well_formed()) throw IllFormed({static_cast<int>(i)}, "argument is ill-formed");
    }
    const Path& p = args[0];
    switch (law) {
        case GroupoidLaw::Assoc:
            return root_step(Path::trans(Path::trans(p, args[1]), args[2]), RuleId::TT);
        case GroupoidLaw::LUnit:
            return root_step(Path::trans(Path::refl(p.src()), p), RuleId::TLR);
        case GroupoidLaw::RUnit:
            return root_step(Path::trans(p, Path::refl(p.tgt())), RuleId::TRR);
        case GroupoidLaw::LInv:
            return root_step(Path::trans(Path::symm(p), p), RuleId::TSR);
        case GroupoidLaw::RInv:
            return root_step(Path::trans(p, Path::symm(p)), RuleId::TR);
        case GroupoidLaw::InvInv:
            return root_step(Path::symm(Path::symm(p)), RuleId::SS);
    }
    throw Error("unreachable");
}

Derivation assoc2(const Path& p, const Path& q, const Path& r) {
    const std::array<Path, 3> args{p, q, r};
    return witness2(GroupoidLaw::Assoc, args);
}

Derivation lunit2(const Path& p) { return witness2(GroupoidLaw::LUnit, std::span<const Path>(&p, 1)); }
Derivation runit2(const Path& p) { return witness2(GroupoidLaw::RUnit, std::span<const Path>(&p, 1)); }

}  // namespace cpaths
