#pragma once

#include <cstdint>
#include <string_view>

#include <json.hpp>

#include "bullfree/homogeneous.hpp"
#include "bullfree/independent_set.hpp"
#include "bullfree/kernel.hpp"
#include "bullfree/patterns.hpp"
#include "bullfree/reduction.hpp"
#include "bullfree/solver.hpp"

namespace bullfree::cli {

using nlohmann::json;

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

json to_json(const PatternWitness& w);
json to_json(const HomogeneousSet& s);
json to_json(const HomogeneousPair& p);
json to_json(const DecompositionOutcome& d);
json to_json(const IndependentSetResult& s);
json to_json(const WisDecision& d);
json to_json(const KernelBounds& b);
json to_json(const T1Report& r);
json to_json(const InstanceReport& r);

/// {p, q, m, edgeCountOriginal, targetK, labels}; one label per vertex of
/// the subdivided graph.
json reduction_sidecar(const ReductionArtifact& art);

/// Reads {"X": [...], "cliques": [[...], ...], "aSides": [[...] | null, ...]}.
/// "aSides" is optional. Throws ParseError on a malformed document.
T1Structure t1_structure_from_json(const json& doc);

}  // namespace bullfree::cli
