#pragma once

#include <json.hpp>

#include "cpaths/confluence.hpp"
#include "cpaths/derivation.hpp"
#include "cpaths/tower.hpp"
#include "cpaths/trs.hpp"

namespace cpaths {

using json = nlohmann::json;

// Paths are embedded as s-expression strings. Trees use one key per
// constructor:
//   derivation  {"refl": p} {"step": {"source","target","pos","rule"}}
//               {"inv": t} {"comp": [t1, t2]}
//   cell        {"refl": face} {"step": {"meta", "cells": [face...], "paths": [p...]}}
//               {"inv": t} {"comp": [t1, t2]}
//   face        {"dim": n, "tree": ...}   (dim 1: tree is a path string)

json to_json(const StepWitness& s);
StepWitness step_from_json(const json& j);

json to_json(const Trace& t);
/// Throws SyntaxError, json errors, or IllFormed when the steps do not chain.
Trace trace_from_json(const json& j);

json tree_to_json(const Derivation& d);
Derivation derivation_from_json(const json& tree);

json tree_to_json(const Cell& c);
Cell cell_from_json(const json& tree);

json face_to_json(const Face& f);
Face face_from_json(const json& j);

/// {"kind":"cell2","src","tgt","tree"}
json certificate(const Derivation& d);
/// {"kind":"cell3"|"cellN","dim","src","tgt","tree"}
json certificate(const Cell& c);
json certificate(const Face& f);

/// Decodes and re-checks: every step is replayed, every composite chained,
/// every meta-step boundary recomputed, and the claimed boundaries compared.
/// Malformed JSON is reported as IllFormed rather than thrown.
Verdict verify_certificate(const json& cert);
/// Decodes without checking. Throws on malformed input.
Face face_from_certificate(const json& cert);

json to_json(const CorpusReport& r);

}  // namespace cpaths
