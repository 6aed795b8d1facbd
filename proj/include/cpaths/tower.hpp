#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cpaths/derivation.hpp"

namespace cpaths {

class Face;
class MetaStep;

/// An n-cell for n >= 3. One representation covers every dimension; the
/// boundary of a 3-cell is a pair of derivations, of an n-cell (n >= 4) a
/// pair of (n-1)-cells.
///
/// Boundaries are computed once at construction from the payload. A step
/// whose payload has no boundary (say `can` on non-equivalent paths) cannot
/// be built: the factory throws.
class Cell {
public:
    enum class Kind : std::uint8_t { Refl, Step, Inv, Comp };

    /// Identity on `x`; x must have dimension >= 2.
    static Cell refl(Face x);
    static Cell step(MetaStep m);
    static Cell inv(Cell c);
    /// Throws IllFormed on a dimension mismatch. Chaining is left to verify.
    static Cell comp(Cell first, Cell second);

    Kind kind() const noexcept;
    bool is(Kind k) const noexcept { return kind() == k; }
    int dim() const noexcept;

    const Face& face() const;        // Refl
    const MetaStep& meta() const;    // Step
    const Cell& sub() const;         // Inv
    const Cell& first() const;       // Comp
    const Cell& second() const;      // Comp

    const Face& src() const noexcept;
    const Face& tgt() const noexcept;

    std::size_t size() const noexcept;

    friend bool operator==(const Cell& a, const Cell& b);
    friend bool operator!=(const Cell& a, const Cell& b) { return !(a == b); }

    bool same_node(const Cell& other) const noexcept { return node_ == other.node_; }

    struct Node;

private:
    Cell() = default;
    explicit Cell(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// A cell of any dimension: 1 = path, 2 = derivation, 3+ = Cell.
class Face {
public:
    Face(Path p) : v_(std::move(p)) {}
    Face(Derivation d) : v_(std::move(d)) {}
    Face(Cell c) : v_(std::move(c)) {}

    int dim() const noexcept;
    bool is_path() const noexcept { return v_.index() == 0; }
    bool is_derivation() const noexcept { return v_.index() == 1; }
    bool is_cell() const noexcept { return v_.index() == 2; }

    const Path& path() const;
    const Derivation& derivation() const;
    const Cell& cell() const;

    /// Boundary one dimension down. Not defined on paths (throws Error).
    Face src() const;
    Face tgt() const;

    friend bool operator==(const Face& a, const Face& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Face& a, const Face& b) { return !(a == b); }

private:
    std::variant<Path, Derivation, Cell> v_;
};

/// Primitive generators for n-cells. The payload is a list of (n-1)-faces
/// plus, for the level-3-only coherences, the 1-cells involved.
class MetaStep {
public:
    enum class Kind : std::uint8_t {
        VCompReflRight,
        VCompReflLeft,
        VCompAssoc,
        InvInv,
        VCompInvRight,
        VCompInvLeft,
        StepEq,
        Can,
        Pentagon,
        Triangle,
        Interchange,
        WhiskerL,
        WhiskerR,
    };

    static MetaStep vcomp_refl_right(Face c);
    static MetaStep vcomp_refl_left(Face c);
    static MetaStep vcomp_assoc(Face c1, Face c2, Face c3);
    static MetaStep inv_inv(Face c);
    static MetaStep vcomp_inv_right(Face c);
    static MetaStep vcomp_inv_left(Face c);
    /// Two step cells with the same boundary are equal (proof irrelevance).
    static MetaStep step_eq(Face s1, Face s2);
    static MetaStep can(Face c);
    // level 3 only
    static MetaStep pentagon(Path f, Path g, Path h, Path k);
    static MetaStep triangle(Path f, Path g);
    static MetaStep interchange(Derivation alpha, Derivation beta);
    static MetaStep whisker_l(Path h, Derivation d);
    static MetaStep whisker_r(Derivation d, Path g);

    /// Generic constructor used by deserialisation. Throws IllFormed when the
    /// payload shape does not fit the kind.
    MetaStep(Kind kind, std::vector<Face> faces, std::vector<Path> paths);

    Kind kind() const noexcept { return kind_; }
    /// Dimension of the cell this generates.
    int dim() const noexcept { return dim_; }
    const std::vector<Face>& faces() const noexcept { return faces_; }
    const std::vector<Path>& paths() const noexcept { return paths_; }

    friend bool operator==(const MetaStep& a, const MetaStep& b) {
        return a.kind_ == b.kind_ && a.faces_ == b.faces_ && a.paths_ == b.paths_;
    }

private:
    Kind kind_;
    int dim_ = 3;
    std::vector<Face> faces_;
    std::vector<Path> paths_;
};

const char* meta_name(MetaStep::Kind k) noexcept;
std::optional<MetaStep::Kind> meta_from_name(std::string_view name) noexcept;

/// (lhs, rhs) of a meta-step. Throws IllFormed, NotEquivalent, NotParallel.
std::pair<Face, Face> ms_boundary(const MetaStep& m);
/// Same, for a 3-dimensional meta-step.
std::pair<Derivation, Derivation> ms3_boundary(const MetaStep& m);
std::pair<Derivation, Derivation> c3_boundary(const Cell& c);

/// Re-checks payloads, meta-step boundaries, chaining and parallelism.
Verdict verify_cell(const Cell& c);
inline Verdict verify3(const Cell& c) { return verify_cell(c); }
/// Dispatches on dimension: validate, verify, verify_cell.
Verdict verify_face(const Face& f);

/// src.src = tgt.src and src.tgt = tgt.tgt, checked down to dimension 0.
bool globular_check(const Face& f);

/// can(d1) . inv(can(d2)). Throws NotParallel.
Cell chi3(const Derivation& d1, const Derivation& d2);
/// The same at dimension n >= 4 on parallel (n-1)-cells.
Cell chiN(int n, const Cell& c1, const Cell& c2);
/// The canonical (k+1)-cell between parallel k-faces: gamma on paths, chi3 on
/// derivations, chiN above.
Face canonical(const Face& a, const Face& b);

/// Groupoid-law witnesses one dimension up: assoc -> vcomp_assoc,
/// lunit -> vcomp_refl_left, runit -> vcomp_refl_right, linv -> vcomp_inv_left,
/// rinv -> vcomp_inv_right, invinv -> inv_inv.
Cell witness3(GroupoidLaw law, std::span<const Derivation> args);
Cell witness_n(GroupoidLaw law, std::span<const Face> args);

enum class Coherence : std::uint8_t { Pentagon, Triangle, Interchange };
const char* coherence_name(Coherence c) noexcept;
std::optional<Coherence> coherence_from_name(std::string_view name) noexcept;

Cell pentagon3(const Path& f, const Path& g, const Path& h, const Path& k);
Cell triangle3(const Path& f, const Path& g);
Cell interchange3(const Derivation& alpha, const Derivation& beta);

/// The composites the coherence cells connect.
///   pentagon left  : assoc(f.g, h, k) . assoc(f, g, h.k)
///   pentagon right : (assoc(f,g,h) |> k) . assoc(f, g.h, k) . (f <| assoc(g,h,k))
///   triangle left  : assoc(f, id, g) . (f <| lunit g)
///   triangle right : runit f |> g
///   interchange    : (a * id g).(id f' * b)  and  (id f * b).(a * id g')
std::pair<Derivation, Derivation> pentagon_sides(const Path& f, const Path& g, const Path& h,
                                                 const Path& k);
std::pair<Derivation, Derivation> triangle_sides(const Path& f, const Path& g);
std::pair<Derivation, Derivation> interchange_sides(const Derivation& alpha, const Derivation& beta);

/// Identity, composition and inverse on faces of any dimension. On paths
/// these are refl (one dimension up), trans and symm.
Face identity(const Face& x);
Face compose(const Face& a, const Face& b);
Face inverse(const Face& a);

// ----------------------------------------------------------------------------

struct Cell::Node {
    Kind kind;
    int dim = 3;
    std::optional<Face> face;
    std::optional<MetaStep> meta;
    Cell a;
    Cell b;
    std::optional<Face> src;
    std::optional<Face> tgt;
    std::size_t size = 1;
};

}  // namespace cpaths
