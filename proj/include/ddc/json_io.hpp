#pragma once

#include <json.hpp>

#include "ddc/codeprops.hpp"
#include "ddc/ddc_code.hpp"
#include "ddc/search.hpp"
#include "ddc/splitting.hpp"

namespace ddc {

// {"n", "s1", "s2", "witnesses", "base" (null when not coset-derived)}
nlohmann::json splitting_to_json(const Splitting& sp);
Splitting splitting_from_json(const nlohmann::json& j);

// {"kind", "q", "n", "s1", "r", "s", "t" [, "alpha", "beta", "gamma"],
//  "generator"}; field elements are symbol strings, the generator is the
// matrix text format.
nlohmann::json code_to_json(const DdcCode& code);

// Rebuilds the code from its construction parameters; if a "generator" entry
// is present it is cross-checked against the rebuilt matrix (throws
// std::invalid_argument on disagreement).
DdcCode code_from_json(const nlohmann::json& j);

// {"length", "dim", "d", "a_d" (null unless exact), "self_dual",
//  "hermitian_self_dual" (null unless q=4), "type" ("I"/"II"/null),
//  "formally_self_dual" (bool or "unknown"), "method", "provenance"}
nlohmann::json report_to_json(const CodeReport& report);

// {"columns", "rows": [{"n", "cl", "cells": {col: {"d", "witness"}}}],
//  "notices"}
nlohmann::json scan_to_json(const ScanResult& result, int q);

}  // namespace ddc
