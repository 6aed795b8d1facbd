#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "cpaths/path.hpp"
#include "cpaths/trs.hpp"

namespace cpaths {

struct GenConfig {
    std::uint64_t seed = 1;
    int max_path_depth = 4;
    int max_expr_depth = 3;
    std::vector<std::string> base_constants = {"a", "b", "c", "f"};
};

/// Seeded random source of expressions, redexes and well-formed paths.
/// Leaves are chosen 40% of the time, constructors 60%; the right branch of
/// a trans is grown from the left branch's target so every composite chains.
class PathGenerator {
public:
    explicit PathGenerator(GenConfig cfg);

    Path path() { return path(cfg_.max_path_depth); }
    Path path(int depth);
    /// A path of depth <= `depth` whose source is `from`.
    Path path_from(const Expr& from, int depth);

    Expr expr() { return expr(cfg_.max_expr_depth); }
    Expr expr(int depth);
    Expr beta_redex();
    Expr eta_redex();

    /// A path with `rule`'s left-hand side at the root, depth <= max_path_depth.
    Path rule_instance(RuleId rule);

    std::mt19937_64& rng() noexcept { return rng_; }
    const GenConfig& config() const noexcept { return cfg_; }

private:
    bool chance(double p);
    int pick(int n);
    Path leaf();
    Path leaf_from(const Expr& from);
    Path path_to(const Expr& to, int depth);

    GenConfig cfg_;
    std::mt19937_64 rng_;
};

/// Deterministic per seed.
Path gen_path(const GenConfig& cfg);

struct ConfluenceFailure {
    Path source;
    Reduct first;
    Reduct second;
    std::optional<Path> nf_first;   // nullopt when normalisation ran out of fuel
    std::optional<Path> nf_second;
};

struct LocalConfluence {
    std::size_t divergences = 0;
    std::size_t joinable = 0;
    std::size_t max_steps = 0;  // longest normalisation performed
    std::vector<ConfluenceFailure> failures;
};

/// Normalises both sides of every unordered pair of one-step reducts.
LocalConfluence local_confluence(const Path& p, const RuleSet& rules = RuleSet::standard(),
                                 std::size_t fuel = kDefaultFuel);

/// Undirected rewrite graph over the forward closure of a seed set. Edges
/// are single steps; search along them in either direction approximates
/// the equivalence closure from inside the closure.
class RewriteGraph {
public:
    RewriteGraph(const std::vector<Path>& seeds, const RuleSet& rules = RuleSet::standard(),
                 std::size_t node_limit = 200000);

    std::size_t size() const noexcept { return nodes_.size(); }
    /// True when the node limit stopped exploration early.
    bool truncated() const noexcept { return truncated_; }
    std::optional<std::size_t> index_of(const Path& p) const;
    const Path& node(std::size_t i) const { return nodes_[i]; }

    /// Hop distances from `from`, capped at `bound` (unreached = SIZE_MAX).
    std::vector<std::size_t> distances(std::size_t from, std::size_t bound) const;

private:
    std::vector<Path> nodes_;
    std::vector<std::vector<std::size_t>> adj_;
    std::unordered_map<std::string, std::size_t> index_;
    bool truncated_ = false;
};

struct BfsResult {
    bool connected = false;
    std::size_t distance = 0;
    std::size_t explored = 0;
    bool truncated = false;
};

inline constexpr std::size_t kDefaultBfsBound = 12;

/// Breadth-first search over forward and backward steps, inside the
/// forward closure of {p, q}, up to `bound` steps.
BfsResult bfs_rweq(const Path& p, const Path& q, std::size_t bound = kDefaultBfsBound,
                   const RuleSet& rules = RuleSet::standard());

/// Normalises `p` under `k` random position/rule choices and reports
/// whether every run reached the same normal form.
bool strategy_agreement(const Path& p, int k, std::uint64_t seed,
                        const RuleSet& rules = RuleSet::standard(),
                        std::size_t fuel = kDefaultFuel);

/// Normal form reached by always firing a uniformly random reduct.
Normalized normalize_random(const Path& p, std::mt19937_64& rng,
                            const RuleSet& rules = RuleSet::standard(),
                            std::size_t fuel = kDefaultFuel);

/// Building blocks for exhaustive enumeration.
struct TermFamily {
    std::vector<Path> leaves;
    std::vector<std::string> xi_binders;
    std::vector<Expr> nu_args;
    std::vector<Expr> mu_funs;
};

/// Small fixed family: refl/beta/eta leaves over a handful of closed terms.
TermFamily default_family();

/// Every well-formed path of depth <= `max_depth` built from the family,
/// without duplicates.
std::vector<Path> enumerate_paths(const TermFamily& family, int max_depth);

struct CorpusReport {
    std::uint64_t corpus_seed = 0;
    std::size_t paths = 0;
    std::size_t divergent_pairs = 0;
    std::size_t joinable = 0;
    std::size_t max_steps = 0;
    std::vector<ConfluenceFailure> failures;
};

/// Generates `count` paths (seed, seed+1, ...) and checks local confluence
/// on each, split across `threads` workers.
CorpusReport confluence_corpus(const GenConfig& cfg, std::size_t count, unsigned threads = 0,
                               const RuleSet& rules = RuleSet::standard(),
                               std::size_t fuel = kDefaultFuel);

}  // namespace cpaths
