#include "cpaths/tower.hpp"

#include <array>

namespace cpaths {

namespace {

using MK = MetaStep::Kind;

constexpr std::array<const char*, 13> kMetaNames = {
    "vcomp_refl_right", "vcomp_refl_left", "vcomp_assoc", "inv_inv",   "vcomp_inv_right",
    "vcomp_inv_left",   "step_eq",         "can",         "pentagon",  "triangle",
    "interchange",      "whisker_l",       "whisker_r",
};

constexpr std::array<const char*, 3> kCoherenceNames = {"pentagon", "triangle", "interchange"};

// (faces, paths) each kind expects
std::pair<int, int> payload_shape(MK k) {
    switch (k) {
        case MK::VCompAssoc: return {3, 0};
        case MK::StepEq: return {2, 0};
        case MK::Pentagon: return {0, 4};
        case MK::Triangle: return {0, 2};
        case MK::Interchange: return {2, 0};
        case MK::WhiskerL:
        case MK::WhiskerR: return {1, 1};
        default: return {1, 0};
    }
}

bool level3_only(MK k) {
    return k == MK::Pentagon || k == MK::Triangle || k == MK::Interchange || k == MK::WhiskerL ||
           k == MK::WhiskerR;
}

bool is_step(const Face& f) {
    if (f.is_derivation()) return f.derivation().is(Derivation::Kind::Step);
    if (f.is_cell()) return f.cell().is(Cell::Kind::Step);
    return false;
}

bool parallel(const Face& a, const Face& b) {
    if (a.dim() != b.dim()) return false;
    if (a.is_path()) {
        const Path& p = a.path();
        const Path& q = b.path();
        return p.well_formed() && q.well_formed() && p.src() == q.src() && p.tgt() == q.tgt();
    }
    return a.src() == b.src() && a.tgt() == b.tgt();
}

Verdict prefixed(Verdict v, const TreePos& prefix) {
    if (v) return v;
    TreePos pos = prefix;
    pos.insert(pos.end(), v.failure().pos.begin(), v.failure().pos.end());
    return Verdict::fail(v.failure().kind, std::move(pos), v.failure().reason);
}

Verdict verify_meta(const MetaStep& m, const Cell& c, TreePos& pos) {
    for (std::size_t i = 0; i < m.faces().size(); ++i) {
        pos.push_back(static_cast<int>(i));
        Verdict v = prefixed(verify_face(m.faces()[i]), pos);
        pos.pop_back();
        if (!v) return v;
    }
    for (std::size_t i = 0; i < m.paths().size(); ++i) {
        if (!m.paths()[i].well_formed()) {
            return Verdict::fail(Failure::Kind::IllFormed, pos,
                                 std::string(meta_name(m.kind())) + ": path argument " + std::to_string(i) +
                                     " is ill-formed");
        }
    }
    if (m.kind() == MK::StepEq && !(is_step(m.faces()[0]) && is_step(m.faces()[1]))) {
        return Verdict::fail(Failure::Kind::BadBoundary, pos, "step_eq: payload cells must be steps");
    }
    // The boundary sides are assembled from the payload; check that the
    // assembled composites themselves chain.
    for (const Face* side : {&c.src(), &c.tgt()}) {
        Verdict v = prefixed(verify_face(*side), pos);
        if (!v) {
            return Verdict::fail(Failure::Kind::BadBoundary, pos,
                                 std::string(meta_name(m.kind())) + ": boundary does not check: " +
                                     v.failure().reason);
        }
    }
    if (!parallel(c.src(), c.tgt())) {
        return Verdict::fail(Failure::Kind::BadBoundary, pos,
                             std::string(meta_name(m.kind())) + ": boundary sides are not parallel");
    }
    return Verdict::ok();
}

Verdict verify_at(const Cell& c, TreePos& pos) {
    switch (c.kind()) {
        case Cell::Kind::Refl:
            return prefixed(verify_face(c.face()), pos);
        case Cell::Kind::Step:
            return verify_meta(c.meta(), c, pos);
        case Cell::Kind::Inv: {
            pos.push_back(0);
            Verdict v = verify_at(c.sub(), pos);
            pos.pop_back();
            return v;
        }
        case Cell::Kind::Comp: {
            for (int i = 0; i < 2; ++i) {
                pos.push_back(i);
                Verdict v = verify_at(i == 0 ? c.first() : c.second(), pos);
                pos.pop_back();
                if (!v) return v;
            }
            if (c.first().tgt() != c.second().src()) {
                return Verdict::fail(Failure::Kind::BadChain, pos, "composite does not chain");
            }
            return Verdict::ok();
        }
    }
    return Verdict::ok();
}

Cell chi_any(const Face& a, const Face& b) {
    if (!parallel(a, b)) throw NotParallel("cells are not parallel");
    return Cell::comp(Cell::step(MetaStep::can(a)), Cell::inv(Cell::step(MetaStep::can(b))));
}

Derivation dref(const Face& f) { return f.derivation(); }

}  // namespace

// ---------------------------------------------------------------- Face

int Face::dim() const noexcept {
    switch (v_.index()) {
        case 0: return 1;
        case 1: return 2;
        default: return std::get<2>(v_).dim();
    }
}

const Path& Face::path() const {
    if (!is_path()) throw Error("face is not a path");
    return std::get<0>(v_);
}

const Derivation& Face::derivation() const {
    if (!is_derivation()) throw Error("face is not a derivation");
    return std::get<1>(v_);
}

const Cell& Face::cell() const {
    if (!is_cell()) throw Error("face is not a cell");
    return std::get<2>(v_);
}

Face Face::src() const {
    if (is_derivation()) return derivation().src();
    if (is_cell()) return cell().src();
    throw Error("a path has no face boundary");
}

Face Face::tgt() const {
    if (is_derivation()) return derivation().tgt();
    if (is_cell()) return cell().tgt();
    throw Error("a path has no face boundary");
}

// ---------------------------------------------------------------- MetaStep

MetaStep::MetaStep(Kind kind, std::vector<Face> faces, std::vector<Path> paths)
    : kind_(kind), faces_(std::move(faces)), paths_(std::move(paths)) {
    auto [nf, np] = payload_shape(kind);
    if (static_cast<int>(faces_.size()) != nf || static_cast<int>(paths_.size()) != np) {
        throw IllFormed({}, std::string(meta_name(kind)) + ": expected " + std::to_string(nf) + " cell(s) and " +
                                std::to_string(np) + " path(s)");
    }
    if (!faces_.empty()) {
        dim_ = faces_[0].dim() + 1;
        for (const Face& f : faces_) {
            if (f.dim() + 1 != dim_) throw IllFormed({}, std::string(meta_name(kind)) + ": mixed dimensions");
        }
    }
    if (dim_ < 3) throw IllFormed({}, std::string(meta_name(kind)) + ": payload must have dimension >= 2");
    if (level3_only(kind) && dim_ != 3) {
        throw IllFormed({}, std::string(meta_name(kind)) + " exists at dimension 3 only");
    }
}

MetaStep MetaStep::vcomp_refl_right(Face c) { return MetaStep(Kind::VCompReflRight, {std::move(c)}, {}); }
MetaStep MetaStep::vcomp_refl_left(Face c) { return MetaStep(Kind::VCompReflLeft, {std::move(c)}, {}); }
MetaStep MetaStep::vcomp_assoc(Face c1, Face c2, Face c3) {
    return MetaStep(Kind::VCompAssoc, {std::move(c1), std::move(c2), std::move(c3)}, {});
}
MetaStep MetaStep::inv_inv(Face c) { return MetaStep(Kind::InvInv, {std::move(c)}, {}); }
MetaStep MetaStep::vcomp_inv_right(Face c) { return MetaStep(Kind::VCompInvRight, {std::move(c)}, {}); }
MetaStep MetaStep::vcomp_inv_left(Face c) { return MetaStep(Kind::VCompInvLeft, {std::move(c)}, {}); }
MetaStep MetaStep::step_eq(Face s1, Face s2) { return MetaStep(Kind::StepEq, {std::move(s1), std::move(s2)}, {}); }
MetaStep MetaStep::can(Face c) { return MetaStep(Kind::Can, {std::move(c)}, {}); }
MetaStep MetaStep::pentagon(Path f, Path g, Path h, Path k) {
    return MetaStep(Kind::Pentagon, {}, {std::move(f), std::move(g), std::move(h), std::move(k)});
}
MetaStep MetaStep::triangle(Path f, Path g) { return MetaStep(Kind::Triangle, {}, {std::move(f), std::move(g)}); }
MetaStep MetaStep::interchange(Derivation alpha, Derivation beta) {
    return MetaStep(Kind::Interchange, {std::move(alpha), std::move(beta)}, {});
}
MetaStep MetaStep::whisker_l(Path h, Derivation d) { return MetaStep(Kind::WhiskerL, {std::move(d)}, {std::move(h)}); }
MetaStep MetaStep::whisker_r(Derivation d, Path g) { return MetaStep(Kind::WhiskerR, {std::move(d)}, {std::move(g)}); }

const char* meta_name(MetaStep::Kind k) noexcept { return kMetaNames[static_cast<std::size_t>(k)]; }

std::optional<MetaStep::Kind> meta_from_name(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kMetaNames.size(); ++i) {
        if (name == kMetaNames[i]) return static_cast<MetaStep::Kind>(i);
    }
    return std::nullopt;
}

std::pair<Face, Face> ms_boundary(const MetaStep& m) {
    const auto& fs = m.faces();
    const auto& ps = m.paths();
    switch (m.kind()) {
        case MK::VCompReflRight:
            return {compose(fs[0], identity(fs[0].tgt())), fs[0]};
        case MK::VCompReflLeft:
            return {compose(identity(fs[0].src()), fs[0]), fs[0]};
        case MK::VCompAssoc:
            return {compose(compose(fs[0], fs[1]), fs[2]), compose(fs[0], compose(fs[1], fs[2]))};
        case MK::InvInv:
            return {inverse(inverse(fs[0])), fs[0]};
        case MK::VCompInvRight:
            return {compose(fs[0], inverse(fs[0])), identity(fs[0].src())};
        case MK::VCompInvLeft:
            return {compose(inverse(fs[0]), fs[0]), identity(fs[0].tgt())};
        case MK::StepEq:
            return {fs[0], fs[1]};
        case MK::Can:
            return {fs[0], canonical(fs[0].src(), fs[0].tgt())};
        case MK::Pentagon: {
            auto [l, r] = pentagon_sides(ps[0], ps[1], ps[2], ps[3]);
            return {l, r};
        }
        case MK::Triangle: {
            auto [l, r] = triangle_sides(ps[0], ps[1]);
            return {l, r};
        }
        case MK::Interchange: {
            auto [l, r] = interchange_sides(dref(fs[0]), dref(fs[1]));
            return {l, r};
        }
        case MK::WhiskerL: {
            const Derivation& d = fs[0].derivation();
            return {whisker2(Side::Left, ps[0], d), hcomp2(Derivation::refl(ps[0]), d)};
        }
        case MK::WhiskerR: {
            const Derivation& d = fs[0].derivation();
            return {whisker2(Side::Right, ps[0], d), hcomp2(d, Derivation::refl(ps[0]))};
        }
    }
    throw Error("unreachable");
}

std::pair<Derivation, Derivation> ms3_boundary(const MetaStep& m) {
    if (m.dim() != 3) throw IllFormed({}, "not a 3-dimensional meta-step");
    auto [l, r] = ms_boundary(m);
    return {l.derivation(), r.derivation()};
}

// ---------------------------------------------------------------- Cell

Cell Cell::refl(Face x) {
    if (x.dim() < 2) throw IllFormed({}, "refl cell needs a derivation or a cell");
    Node n{};
    n.kind = Kind::Refl;
    n.dim = x.dim() + 1;
    n.src = x;
    n.tgt = x;
    n.face = std::move(x);
    return Cell(std::make_shared<const Node>(std::move(n)));
}

Cell Cell::step(MetaStep m) {
    auto [l, r] = ms_boundary(m);
    Node n{};
    n.kind = Kind::Step;
    n.dim = m.dim();
    n.src = std::move(l);
    n.tgt = std::move(r);
    n.meta = std::move(m);
    return Cell(std::make_shared<const Node>(std::move(n)));
}

Cell Cell::inv(Cell c) {
    Node n{};
    n.kind = Kind::Inv;
    n.dim = c.dim();
    n.src = c.tgt();
    n.tgt = c.src();
    n.size = c.size() + 1;
    n.a = std::move(c);
    return Cell(std::make_shared<const Node>(std::move(n)));
}

Cell Cell::comp(Cell first, Cell second) {
    if (first.dim() != second.dim()) throw IllFormed({}, "composite of cells of different dimension");
    Node n{};
    n.kind = Kind::Comp;
    n.dim = first.dim();
    n.src = first.src();
    n.tgt = second.tgt();
    n.size = first.size() + second.size() + 1;
    n.a = std::move(first);
    n.b = std::move(second);
    return Cell(std::make_shared<const Node>(std::move(n)));
}

Cell::Kind Cell::kind() const noexcept { return node_->kind; }
int Cell::dim() const noexcept { return node_->dim; }

const Face& Cell::face() const {
    if (kind() != Kind::Refl) throw Error("cell is not refl");
    return *node_->face;
}

const MetaStep& Cell::meta() const {
    if (kind() != Kind::Step) throw Error("cell is not a step");
    return *node_->meta;
}

const Cell& Cell::sub() const {
    if (kind() != Kind::Inv) throw Error("cell is not inv");
    return node_->a;
}

const Cell& Cell::first() const {
    if (kind() != Kind::Comp) throw Error("cell is not a composite");
    return node_->a;
}

const Cell& Cell::second() const {
    if (kind() != Kind::Comp) throw Error("cell is not a composite");
    return node_->b;
}

const Face& Cell::src() const noexcept { return *node_->src; }
const Face& Cell::tgt() const noexcept { return *node_->tgt; }
std::size_t Cell::size() const noexcept { return node_->size; }

bool operator==(const Cell& a, const Cell& b) {
    if (a.same_node(b)) return true;
    if (a.kind() != b.kind() || a.dim() != b.dim()) return false;
    switch (a.kind()) {
        case Cell::Kind::Refl: return a.face() == b.face();
        case Cell::Kind::Step: return a.meta() == b.meta();
        case Cell::Kind::Inv: return a.sub() == b.sub();
        case Cell::Kind::Comp: return a.first() == b.first() && a.second() == b.second();
    }
    return false;
}

std::pair<Derivation, Derivation> c3_boundary(const Cell& c) {
    if (c.dim() != 3) throw IllFormed({}, "not a 3-cell");
    return {c.src().derivation(), c.tgt().derivation()};
}

// ---------------------------------------------------------------- checks

Verdict verify_cell(const Cell& c) {
    TreePos pos;
    Verdict v = verify_at(c, pos);
    if (!v) return v;
    if (!parallel(c.src(), c.tgt())) {
        return Verdict::fail(Failure::Kind::BadBoundary, {}, "boundary cells are not parallel");
    }
    return v;
}

Verdict verify_face(const Face& f) {
    if (f.is_path()) return validate(f.path());
    if (f.is_derivation()) return verify(f.derivation());
    return verify_cell(f.cell());
}

bool globular_check(const Face& f) {
    if (f.is_path()) return f.path().well_formed();
    if (f.is_derivation()) return globular_check(f.derivation());
    const Face s = f.src();
    const Face t = f.tgt();
    if (s.is_path()) return false;
    if (s.src() != t.src() || s.tgt() != t.tgt()) return false;
    return globular_check(s) && globular_check(t);
}

// ---------------------------------------------------------------- contractibility

Cell chi3(const Derivation& d1, const Derivation& d2) { return chi_any(d1, d2); }

Cell chiN(int n, const Cell& c1, const Cell& c2) {
    if (n < 4 || c1.dim() != n - 1) throw IllFormed({}, "chiN expects (n-1)-cells with n >= 4");
    return chi_any(c1, c2);
}

Face canonical(const Face& a, const Face& b) {
    if (a.is_path()) {
        if (!b.is_path()) throw NotParallel("faces of different dimension");
        return gamma(a.path(), b.path());
    }
    return chi_any(a, b);
}

// ---------------------------------------------------------------- witnesses

Cell witness_n(GroupoidLaw law, std::span<const Face> args) {
    if (static_cast<int>(args.size()) != law_arity(law)) {
        throw IllFormed({}, std::string(law_name(law)) + " takes " + std::to_string(law_arity(law)) + " cell(s)");
    }
    switch (law) {
        case GroupoidLaw::Assoc: return Cell::step(MetaStep::vcomp_assoc(args[0], args[1], args[2]));
        case GroupoidLaw::LUnit: return Cell::step(MetaStep::vcomp_refl_left(args[0]));
        case GroupoidLaw::RUnit: return Cell::step(MetaStep::vcomp_refl_right(args[0]));
        case GroupoidLaw::LInv: return Cell::step(MetaStep::vcomp_inv_left(args[0]));
        case GroupoidLaw::RInv: return Cell::step(MetaStep::vcomp_inv_right(args[0]));
        case GroupoidLaw::InvInv: return Cell::step(MetaStep::inv_inv(args[0]));
    }
    throw Error("unreachable");
}

Cell witness3(GroupoidLaw law, std::span<const Derivation> args) {
    std::vector<Face> faces(args.begin(), args.end());
    return witness_n(law, faces);
}

const char* coherence_name(Coherence c) noexcept { return kCoherenceNames[static_cast<std::size_t>(c)]; }

std::optional<Coherence> coherence_from_name(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kCoherenceNames.size(); ++i) {
        if (name == kCoherenceNames[i]) return static_cast<Coherence>(i);
    }
    return std::nullopt;
}

Cell pentagon3(const Path& f, const Path& g, const Path& h, const Path& k) {
    return Cell::step(MetaStep::pentagon(f, g, h, k));
}

Cell triangle3(const Path& f, const Path& g) { return Cell::step(MetaStep::triangle(f, g)); }

Cell interchange3(const Derivation& alpha, const Derivation& beta) {
    return Cell::step(MetaStep::interchange(alpha, beta));
}

std::pair<Derivation, Derivation> pentagon_sides(const Path& f, const Path& g, const Path& h, const Path& k) {
    Derivation left = Derivation::comp(assoc2(Path::trans(f, g), h, k), assoc2(f, g, Path::trans(h, k)));
    Derivation right = Derivation::comp(
        Derivation::comp(whisker2(Side::Right, k, assoc2(f, g, h)), assoc2(f, Path::trans(g, h), k)),
        whisker2(Side::Left, f, assoc2(g, h, k)));
    return {left, right};
}

std::pair<Derivation, Derivation> triangle_sides(const Path& f, const Path& g) {
    const Path id = Path::refl(f.tgt());
    Derivation left = Derivation::comp(assoc2(f, id, g), whisker2(Side::Left, f, lunit2(g)));
    Derivation right = whisker2(Side::Right, g, runit2(f));
    return {left, right};
}

std::pair<Derivation, Derivation> interchange_sides(const Derivation& alpha, const Derivation& beta) {
    const Path& f = alpha.src();
    const Path& f2 = alpha.tgt();
    const Path& g = beta.src();
    const Path& g2 = beta.tgt();
    Derivation left = Derivation::comp(hcomp2(alpha, Derivation::refl(g)), hcomp2(Derivation::refl(f2), beta));
    Derivation right = Derivation::comp(hcomp2(Derivation::refl(f), beta), hcomp2(alpha, Derivation::refl(g2)));
    return {left, right};
}

// ---------------------------------------------------------------- groupoid ops

Face identity(const Face& x) {
    if (x.is_path()) return Derivation::refl(x.path());
    return Cell::refl(x);
}

Face compose(const Face& a, const Face& b) {
    if (a.dim() != b.dim()) throw IllFormed({}, "composite of faces of different dimension");
    if (a.is_path()) return Path::trans(a.path(), b.path());
    if (a.is_derivation()) return Derivation::comp(a.derivation(), b.derivation());
    return Cell::comp(a.cell(), b.cell());
}

Face inverse(const Face& a) {
    if (a.is_path()) return Path::symm(a.path());
    if (a.is_derivation()) return Derivation::inv(a.derivation());
    return Cell::inv(a.cell());
}

}  // namespace cpaths
