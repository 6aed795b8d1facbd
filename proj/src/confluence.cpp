#include "cpaths/confluence.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <thread>
#include <unordered_set>

#include "cpaths/error.hpp"

namespace cpaths {

namespace {

const std::vector<std::string> kVarNames = {"x", "y", "z", "w"};

}  // namespace

PathGenerator::PathGenerator(GenConfig cfg) : cfg_(std::move(cfg)), rng_(cfg_.seed) {
    if (cfg_.max_path_depth < 1 || cfg_.max_expr_depth < 1) {
        throw std::invalid_argument("generator depths must be at least 1");
    }
    if (cfg_.base_constants.empty()) throw std::invalid_argument("generator needs base constants");
}

bool PathGenerator::chance(double p) { return std::bernoulli_distribution(p)(rng_); }

int PathGenerator::pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

Expr PathGenerator::expr(int depth) {
    if (depth <= 1 || chance(0.4)) {
        if (chance(0.6)) return Expr::constant(cfg_.base_constants[pick(static_cast<int>(cfg_.base_constants.size()))]);
        return Expr::var(kVarNames[pick(static_cast<int>(kVarNames.size()))]);
    }
    if (chance(0.3)) return Expr::lam(kVarNames[pick(static_cast<int>(kVarNames.size()))], expr(depth - 1));
    return Expr::app(expr(depth - 1), expr(depth - 1));
}

Expr PathGenerator::beta_redex() {
    const std::string& binder = kVarNames[pick(static_cast<int>(kVarNames.size()))];
    const int d = std::max(1, cfg_.max_expr_depth - 1);
    Expr body = chance(0.3) ? Expr::var(binder) : expr(d);
    return Expr::app(Expr::lam(binder, std::move(body)), expr(d));
}

Expr PathGenerator::eta_redex() {
    Expr fun = expr(std::max(1, cfg_.max_expr_depth - 1));
    const std::string binder = fresh_name("x", free_vars(fun));
    return Expr::lam(binder, Expr::app(fun, Expr::var(binder)));
}

Path PathGenerator::leaf() {
    switch (pick(3)) {
        case 0: return Path::refl(expr());
        case 1: return Path::beta(beta_redex());
        default: return Path::eta(eta_redex());
    }
}

Path PathGenerator::path(int depth) {
    if (depth <= 1 || chance(0.4)) return leaf();
    const int roll = pick(100);
    if (roll < 20) return Path::symm(path(depth - 1));
    if (roll < 55) {
        const int shape = pick(100);
        if (depth >= 3 && shape < 15) {
            Path p = path(depth - 2);
            return Path::trans(p, Path::symm(p));
        }
        if (depth >= 3 && shape < 30) {
            Path p = path(depth - 2);
            return Path::trans(Path::symm(p), p);
        }
        Path p = path(depth - 1);
        Path q = path_from(p.tgt(), depth - 1);
        return Path::trans(std::move(p), std::move(q));
    }
    if (roll < 70) return Path::xi(kVarNames[pick(static_cast<int>(kVarNames.size()))], path(depth - 1));
    if (roll < 85) return Path::nu(path(depth - 1), expr());
    return Path::mu(expr(), path(depth - 1));
}

Path PathGenerator::leaf_from(const Expr& from) {
    std::vector<int> options = {0};
    if (is_beta_redex(from)) options.push_back(1);
    if (is_eta_redex(from)) options.push_back(2);
    switch (options[pick(static_cast<int>(options.size()))]) {
        case 1: return Path::beta(from);
        case 2: return Path::eta(from);
        default: return Path::refl(from);
    }
}

Path PathGenerator::path_from(const Expr& from, int depth) {
    if (depth <= 1 || chance(0.4)) return leaf_from(from);
    enum Choice { Symm, Trans, Xi, Nu, Mu };
    std::vector<Choice> options = {Symm, Trans};
    if (from.is_lam()) options.push_back(Xi);
    if (from.is_app()) {
        options.push_back(Nu);
        options.push_back(Mu);
    }
    switch (options[pick(static_cast<int>(options.size()))]) {
        case Symm:
            return Path::symm(path_to(from, depth - 1));
        case Trans: {
            Path p = path_from(from, depth - 1);
            Path q = path_from(p.tgt(), depth - 1);
            return Path::trans(std::move(p), std::move(q));
        }
        case Xi:
            return Path::xi(from.name(), path_from(from.body(), depth - 1));
        case Nu:
            return Path::nu(path_from(from.fun(), depth - 1), from.arg());
        case Mu:
            return Path::mu(from.fun(), path_from(from.arg(), depth - 1));
    }
    return Path::refl(from);
}

Path PathGenerator::path_to(const Expr& to, int depth) {
    const int roll = pick(depth >= 2 ? 4 : 3);
    const std::string v = fresh_name("v", free_vars(to));
    switch (roll) {
        case 0:
            return Path::refl(to);
        case 1: {
            const auto& consts = cfg_.base_constants;
            Expr arg = Expr::constant(consts[pick(static_cast<int>(consts.size()))]);
            return Path::beta(Expr::app(Expr::lam(v, to), std::move(arg)));
        }
        case 2:
            return Path::eta(Expr::lam(v, Expr::app(to, Expr::var(v))));
        default:
            return Path::symm(path_from(to, depth - 1));
    }
}

Path PathGenerator::rule_instance(RuleId rule) {
    const int d = cfg_.max_path_depth;
    auto sub = [this](int depth) { return path(std::max(1, depth)); };
    auto chained = [this](const Expr& from, int depth) { return path_from(from, std::max(1, depth)); };
    const std::string& binder = kVarNames[pick(static_cast<int>(kVarNames.size()))];
    switch (rule) {
        case RuleId::SR:
            return Path::symm(Path::refl(expr()));
        case RuleId::SS:
            return Path::symm(Path::symm(sub(d - 2)));
        case RuleId::TR: {
            Path r = sub(d - 2);
            return Path::trans(r, Path::symm(r));
        }
        case RuleId::TSR: {
            Path r = sub(d - 2);
            return Path::trans(Path::symm(r), r);
        }
        case RuleId::TRR: {
            Path r = sub(d - 1);
            return Path::trans(r, Path::refl(r.tgt()));
        }
        case RuleId::TLR: {
            Path r = sub(d - 1);
            return Path::trans(Path::refl(r.src()), r);
        }
        case RuleId::TT: {
            Path r = sub(d - 2);
            Path s = chained(r.tgt(), d - 2);
            Path t = chained(s.tgt(), d - 1);
            return Path::trans(Path::trans(r, s), t);
        }
        case RuleId::STSS: {
            Path r = sub(d - 2);
            return Path::symm(Path::trans(r, chained(r.tgt(), d - 2)));
        }
        case RuleId::TC_NU:
        case RuleId::TC_MU:
        case RuleId::TC_XI: {
            Path p = sub(d - 2);
            Path inner = Path::trans(p, chained(p.tgt(), d - 2));
            if (rule == RuleId::TC_NU) return Path::nu(inner, expr());
            if (rule == RuleId::TC_MU) return Path::mu(expr(), inner);
            return Path::xi(binder, inner);
        }
        case RuleId::SC_NU:
            return Path::nu(Path::symm(sub(d - 2)), expr());
        case RuleId::SC_MU:
            return Path::mu(expr(), Path::symm(sub(d - 2)));
        case RuleId::SC_XI:
            return Path::xi(binder, Path::symm(sub(d - 2)));
        case RuleId::RC_NU:
            return Path::nu(Path::refl(expr()), expr());
        case RuleId::RC_MU:
            return Path::mu(expr(), Path::refl(expr()));
        case RuleId::RC_XI:
            return Path::xi(binder, Path::refl(expr()));
        case RuleId::TR_T: {
            Path r = sub(d - 3);
            Path t = chained(r.src(), d - 2);
            return Path::trans(r, Path::trans(Path::symm(r), t));
        }
        case RuleId::TSR_T: {
            Path r = sub(d - 3);
            Path t = chained(r.tgt(), d - 2);
            return Path::trans(Path::symm(r), Path::trans(r, t));
        }
    }
    throw std::logic_error("unknown rule");
}

Path gen_path(const GenConfig& cfg) { return PathGenerator(cfg).path(); }

LocalConfluence local_confluence(const Path& p, const RuleSet& rules, std::size_t fuel) {
    LocalConfluence out;
    const auto reducts = one_step_reducts(p, rules);
    std::vector<std::optional<Path>> nfs;
    nfs.reserve(reducts.size());
    for (const Reduct& r : reducts) {
        try {
            Normalized n = normalize(r.result, fuel, rules);
            out.max_steps = std::max(out.max_steps, n.trace.steps.size());
            nfs.emplace_back(std::move(n.nf));
        } catch (const FuelExhausted&) {
            out.max_steps = std::max(out.max_steps, fuel);
            nfs.emplace_back(std::nullopt);
        }
    }
    for (std::size_t i = 0; i < reducts.size(); ++i) {
        for (std::size_t j = i + 1; j < reducts.size(); ++j) {
            ++out.divergences;
            if (nfs[i] && nfs[j] && *nfs[i] == *nfs[j]) {
                ++out.joinable;
            } else {
                out.failures.push_back(ConfluenceFailure{p, reducts[i], reducts[j], nfs[i], nfs[j]});
            }
        }
    }
    return out;
}

RewriteGraph::RewriteGraph(const std::vector<Path>& seeds, const RuleSet& rules, std::size_t node_limit) {
    std::deque<std::size_t> frontier;
    auto intern = [&](const Path& p) -> std::optional<std::size_t> {
        auto [it, inserted] = index_.try_emplace(path_key(p), nodes_.size());
        if (inserted) {
            if (nodes_.size() >= node_limit) {
                index_.erase(it);
                truncated_ = true;
                return std::nullopt;
            }
            nodes_.push_back(p);
            adj_.emplace_back();
            frontier.push_back(it->second);
        }
        return it->second;
    };
    for (const Path& s : seeds) intern(s);
    while (!frontier.empty()) {
        const std::size_t i = frontier.front();
        frontier.pop_front();
        for (Reduct& r : one_step_reducts(nodes_[i], rules)) {
            auto j = intern(r.result);
            if (!j || *j == i) continue;
            adj_[i].push_back(*j);
            adj_[*j].push_back(i);
        }
    }
    for (auto& edges : adj_) {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }
}

std::optional<std::size_t> RewriteGraph::index_of(const Path& p) const {
    auto it = index_.find(path_key(p));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::size_t> RewriteGraph::distances(std::size_t from, std::size_t bound) const {
    constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(nodes_.size(), kUnreached);
    std::deque<std::size_t> queue{from};
    dist[from] = 0;
    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        if (dist[i] == bound) continue;
        for (std::size_t j : adj_[i]) {
            if (dist[j] != kUnreached) continue;
            dist[j] = dist[i] + 1;
            queue.push_back(j);
        }
    }
    return dist;
}

BfsResult bfs_rweq(const Path& p, const Path& q, std::size_t bound, const RuleSet& rules) {
    BfsResult out;
    if (!(p.src() == q.src()) || !(p.tgt() == q.tgt())) return out;
    RewriteGraph graph({p, q}, rules);
    out.explored = graph.size();
    out.truncated = graph.truncated();
    const auto dist = graph.distances(*graph.index_of(p), bound);
    const std::size_t d = dist[*graph.index_of(q)];
    if (d <= bound) {
        out.connected = true;
        out.distance = d;
    }
    return out;
}

Normalized normalize_random(const Path& p, std::mt19937_64& rng, const RuleSet& rules, std::size_t fuel) {
    (void)p.src();
    Trace trace{p, {}};
    Path cur = p;
    for (;;) {
        auto reducts = one_step_reducts(cur, rules);
        if (reducts.empty()) break;
        if (trace.steps.size() == fuel) throw FuelExhausted(trace.steps.size());
        Reduct& r = reducts[std::uniform_int_distribution<std::size_t>(0, reducts.size() - 1)(rng)];
        trace.steps.push_back(StepWitness{cur, r.result, r.pos, r.rule});
        cur = std::move(r.result);
    }
    return Normalized{std::move(cur), std::move(trace)};
}

bool strategy_agreement(const Path& p, int k, std::uint64_t seed, const RuleSet& rules, std::size_t fuel) {
    std::mt19937_64 rng(seed);
    const Path reference = normalize(p, fuel, rules).nf;
    for (int i = 0; i < k; ++i) {
        if (!(normalize_random(p, rng, rules, fuel).nf == reference)) return false;
    }
    return true;
}

TermFamily default_family() {
    const Expr a = Expr::constant("a");
    const Expr f = Expr::constant("f");
    const Expr id = Expr::lam("x", Expr::var("x"));
    const Expr redex = Expr::app(id, a);
    const Expr expanded = Expr::lam("w", Expr::app(f, Expr::var("w")));
    TermFamily fam;
    fam.leaves = {Path::beta(redex), Path::eta(expanded), Path::refl(a),
                  Path::refl(redex), Path::refl(f), Path::refl(expanded)};
    fam.xi_binders = {"x"};
    fam.nu_args = {Expr::constant("b")};
    fam.mu_funs = {Expr::constant("g")};
    return fam;
}

std::vector<Path> enumerate_paths(const TermFamily& family, int max_depth) {
    std::vector<Path> all;
    std::unordered_set<std::string> seen;
    auto add = [&](Path p) {
        if (!p.well_formed()) return;
        if (seen.insert(path_key(p)).second) all.push_back(std::move(p));
    };
    for (const Path& leaf : family.leaves) add(leaf);
    std::size_t prev_end = 0;  // paths with index < prev_end have depth < current level - 1
    for (int level = 2; level <= max_depth; ++level) {
        const std::size_t end = all.size();
        // new paths use at least one child from the previous level
        for (std::size_t i = 0; i < end; ++i) {
            const Path p = all[i];
            const bool fresh = i >= prev_end;
            if (fresh) {
                add(Path::symm(p));
                for (const auto& x : family.xi_binders) add(Path::xi(x, p));
                for (const auto& n : family.nu_args) add(Path::nu(p, n));
                for (const auto& m : family.mu_funs) add(Path::mu(m, p));
            }
            for (std::size_t j = 0; j < end; ++j) {
                if (!fresh && j < prev_end) continue;
                if (!(all[i].tgt() == all[j].src())) continue;
                add(Path::trans(p, all[j]));
            }
        }
        prev_end = end;
    }
    return all;
}

CorpusReport confluence_corpus(const GenConfig& cfg, std::size_t count, unsigned threads,
                               const RuleSet& rules, std::size_t fuel) {
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    std::vector<CorpusReport> parts(threads);
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&, t] {
            CorpusReport& part = parts[t];
            for (std::size_t i = t; i < count; i += threads) {
                GenConfig c = cfg;
                c.seed = cfg.seed + i;
                const Path p = gen_path(c);
                LocalConfluence lc = local_confluence(p, rules, fuel);
                try {
                    part.max_steps = std::max(part.max_steps, normalize(p, fuel, rules).trace.steps.size());
                } catch (const FuelExhausted&) {
                    part.max_steps = std::max(part.max_steps, fuel);
                }
                ++part.paths;
                part.divergent_pairs += lc.divergences;
                part.joinable += lc.joinable;
                part.max_steps = std::max(part.max_steps, lc.max_steps);
                for (auto& f : lc.failures) part.failures.push_back(std::move(f));
            }
        });
    }
    for (auto& w : workers) w.join();
    CorpusReport out;
    out.corpus_seed = cfg.seed;
    for (auto& part : parts) {
        out.paths += part.paths;
        out.divergent_pairs += part.divergent_pairs;
        out.joinable += part.joinable;
        out.max_steps = std::max(out.max_steps, part.max_steps);
        for (auto& f : part.failures) out.failures.push_back(std::move(f));
    }
    return out;
}

}  // namespace cpaths
