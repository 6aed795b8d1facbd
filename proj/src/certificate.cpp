#include "cpaths/certificate.hpp"

#include "cpaths/sexpr.hpp"

namespace cpaths {

namespace {

Path path_in(const json& j) { return parse_path_unchecked(j.get<std::string>()); }

RuleId rule_in(const json& j) {
    auto r = rule_from_name(j.get<std::string>());
    if (!r) throw IllFormed({}, "unknown rule " + j.get<std::string>());
    return *r;
}

const json& only_entry(const json& j, std::string& key) {
    if (!j.is_object() || j.size() != 1) throw IllFormed({}, "expected a single-constructor object");
    key = j.begin().key();
    return j.begin().value();
}

json reduct_json(const Reduct& r) {
    return {{"pos", r.pos}, {"rule", rule_name(r.rule)}, {"result", to_sexpr(r.result)}};
}

}  // namespace

json to_json(const StepWitness& s) {
    return {{"source", to_sexpr(s.source)}, {"target", to_sexpr(s.target)}, {"pos", s.pos}, {"rule", rule_name(s.rule)}};
}

StepWitness step_from_json(const json& j) {
    return StepWitness{path_in(j.at("source")), path_in(j.at("target")), j.at("pos").get<PathPos>(),
                       rule_in(j.at("rule"))};
}

json to_json(const Trace& t) {
    json steps = json::array();
    for (const StepWitness& s : t.steps) {
        steps.push_back({{"pos", s.pos}, {"rule", rule_name(s.rule)}, {"target", to_sexpr(s.target)}});
    }
    return {{"start", to_sexpr(t.start)}, {"steps", std::move(steps)}};
}

Trace trace_from_json(const json& j) {
    Trace t{path_in(j.at("start")), {}};
    for (const json& s : j.at("steps")) {
        Path source = t.end();
        t.steps.push_back(StepWitness{std::move(source), path_in(s.at("target")), s.at("pos").get<PathPos>(),
                                      rule_in(s.at("rule"))});
    }
    return t;
}

// ---------------------------------------------------------------- derivations

json tree_to_json(const Derivation& d) {
    switch (d.kind()) {
        case Derivation::Kind::Refl: return {{"refl", to_sexpr(d.path())}};
        case Derivation::Kind::Step: return {{"step", to_json(d.witness())}};
        case Derivation::Kind::Inv: return {{"inv", tree_to_json(d.sub())}};
        case Derivation::Kind::Comp:
            return {{"comp", json::array({tree_to_json(d.first()), tree_to_json(d.second())})}};
    }
    return nullptr;
}

Derivation derivation_from_json(const json& tree) {
    std::string key;
    const json& v = only_entry(tree, key);
    if (key == "refl") return Derivation::refl(path_in(v));
    if (key == "step") return Derivation::step(step_from_json(v));
    if (key == "inv") return Derivation::inv(derivation_from_json(v));
    if (key == "comp") {
        if (!v.is_array() || v.size() != 2) throw IllFormed({}, "comp takes two derivations");
        return Derivation::comp(derivation_from_json(v[0]), derivation_from_json(v[1]));
    }
    throw IllFormed({}, "unknown derivation constructor " + key);
}

// ---------------------------------------------------------------- cells

json face_to_json(const Face& f) {
    if (f.is_path()) return {{"dim", 1}, {"tree", to_sexpr(f.path())}};
    if (f.is_derivation()) return {{"dim", 2}, {"tree", tree_to_json(f.derivation())}};
    return {{"dim", f.dim()}, {"tree", tree_to_json(f.cell())}};
}

Face face_from_json(const json& j) {
    const int dim = j.at("dim").get<int>();
    const json& tree = j.at("tree");
    if (dim == 1) return path_in(tree);
    if (dim == 2) return derivation_from_json(tree);
    Cell c = cell_from_json(tree);
    if (c.dim() != dim) throw IllFormed({}, "declared dimension does not match the cell");
    return c;
}

json tree_to_json(const Cell& c) {
    switch (c.kind()) {
        case Cell::Kind::Refl: return {{"refl", face_to_json(c.face())}};
        case Cell::Kind::Step: {
            const MetaStep& m = c.meta();
            json cells = json::array();
            for (const Face& f : m.faces()) cells.push_back(face_to_json(f));
            json paths = json::array();
            for (const Path& p : m.paths()) paths.push_back(to_sexpr(p));
            return {{"step", {{"meta", meta_name(m.kind())}, {"cells", std::move(cells)}, {"paths", std::move(paths)}}}};
        }
        case Cell::Kind::Inv: return {{"inv", tree_to_json(c.sub())}};
        case Cell::Kind::Comp:
            return {{"comp", json::array({tree_to_json(c.first()), tree_to_json(c.second())})}};
    }
    return nullptr;
}

Cell cell_from_json(const json& tree) {
    std::string key;
    const json& v = only_entry(tree, key);
    if (key == "refl") return Cell::refl(face_from_json(v));
    if (key == "step") {
        auto kind = meta_from_name(v.at("meta").get<std::string>());
        if (!kind) throw IllFormed({}, "unknown meta-step " + v.at("meta").get<std::string>());
        std::vector<Face> faces;
        for (const json& f : v.at("cells")) faces.push_back(face_from_json(f));
        std::vector<Path> paths;
        for (const json& p : v.at("paths")) paths.push_back(path_in(p));
        return Cell::step(MetaStep(*kind, std::move(faces), std::move(paths)));
    }
    if (key == "inv") return Cell::inv(cell_from_json(v));
    if (key == "comp") {
        if (!v.is_array() || v.size() != 2) throw IllFormed({}, "comp takes two cells");
        return Cell::comp(cell_from_json(v[0]), cell_from_json(v[1]));
    }
    throw IllFormed({}, "unknown cell constructor " + key);
}

// ---------------------------------------------------------------- certificates

json certificate(const Derivation& d) {
    return {{"kind", "cell2"}, {"src", to_sexpr(d.src())}, {"tgt", to_sexpr(d.tgt())}, {"tree", tree_to_json(d)}};
}

json certificate(const Cell& c) {
    return {{"kind", c.dim() == 3 ? "cell3" : "cellN"},
            {"dim", c.dim()},
            {"src", face_to_json(c.src())},
            {"tgt", face_to_json(c.tgt())},
            {"tree", tree_to_json(c)}};
}

json certificate(const Face& f) {
    if (f.is_derivation()) return certificate(f.derivation());
    if (f.is_cell()) return certificate(f.cell());
    throw IllFormed({}, "paths have no certificate");
}

Face face_from_certificate(const json& cert) {
    const std::string kind = cert.at("kind").get<std::string>();
    if (kind == "cell2") return derivation_from_json(cert.at("tree"));
    if (kind == "cell3" || kind == "cellN") {
        Cell c = cell_from_json(cert.at("tree"));
        if (c.dim() != cert.at("dim").get<int>()) throw IllFormed({}, "declared dimension does not match the cell");
        if ((kind == "cell3") != (c.dim() == 3)) throw IllFormed({}, "kind does not match the dimension");
        return c;
    }
    throw IllFormed({}, "unknown certificate kind " + kind);
}

Verdict verify_certificate(const json& cert) {
    try {
        Face f = face_from_certificate(cert);
        Verdict v = verify_face(f);
        if (!v) return v;
        if (f.is_derivation()) {
            const Derivation& d = f.derivation();
            if (path_in(cert.at("src")) != d.src() || path_in(cert.at("tgt")) != d.tgt()) {
                return Verdict::fail(Failure::Kind::BadBoundary, {}, "claimed boundary does not match the tree");
            }
        } else {
            if (face_from_json(cert.at("src")) != f.src() || face_from_json(cert.at("tgt")) != f.tgt()) {
                return Verdict::fail(Failure::Kind::BadBoundary, {}, "claimed boundary does not match the tree");
            }
        }
        return v;
    } catch (const IllFormed& e) {
        return Verdict::fail(Failure::Kind::IllFormed, e.pos(), e.reason());
    } catch (const std::exception& e) {
        // malformed JSON, bad s-expressions, boundaries that cannot be built
        return Verdict::fail(Failure::Kind::IllFormed, {}, e.what());
    }
}

json to_json(const CorpusReport& r) {
    json failures = json::array();
    for (const ConfluenceFailure& f : r.failures) {
        failures.push_back({{"source", to_sexpr(f.source)},
                            {"first", reduct_json(f.first)},
                            {"second", reduct_json(f.second)},
                            {"nf_first", f.nf_first ? json(to_sexpr(*f.nf_first)) : json(nullptr)},
                            {"nf_second", f.nf_second ? json(to_sexpr(*f.nf_second)) : json(nullptr)}});
    }
    return {{"corpus_seed", r.corpus_seed}, {"paths", r.paths},         {"divergent_pairs", r.divergent_pairs},
            {"joinable", r.joinable},       {"max_steps", r.max_steps}, {"failures", std::move(failures)}};
}

}  // namespace cpaths
