#pragma once

#include <json.hpp>
#include <string>

#include "engine/cochain.hpp"
#include "engine/quantum_space.hpp"
#include "engine/scenarios.hpp"

namespace conic {

using Json = nlohmann::ordered_json;

// A space presentation as it lives on disk: display name plus the space.
struct SpaceDoc {
    std::string name;
    QuantumSpace space;
};

// Space files: {name, generators, cutoff, relations: [{degree, terms:
// [{word, coef}]}]}. Emission is canonical — relations are the RREF bases of
// the ideal components, terms in flat word order, coefficients reduced — so
// parse∘emit is the identity and emissions are byte-stable.
SpaceDoc space_from_json(const Json& j);
Json space_to_json(const SpaceDoc& doc);

// Cochain files carry a "kind": bicharacter | antibicharacter (seed matrix on
// V⊗V, extended), diagonal (q + integer weight matrix), explicit (every block
// |R| ≤ cutoff), primitive (per-degree θ blocks as a level-1 cochain).
// Emission always uses the explicit kind.
Cochain cochain_from_json(const Json& j);
Json cochain_to_json(const Cochain& psi);

// Machine summary of a suite run; runtime is deliberately not serialized so
// identical invocations stay byte-identical.
Json report_to_json(const ScenarioReport& rep);

Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& j);
SpaceDoc load_space(const std::string& path);
void save_space(const std::string& path, const SpaceDoc& doc);
Cochain load_cochain(const std::string& path);
void save_cochain(const std::string& path, const Cochain& psi);

// --cutoff support: lowering re-truncates, raising is refused — it would
// fabricate components that were never present in the file.
QuantumSpace truncate_space(const QuantumSpace& qs, int cutoff);
Cochain truncate_cochain(const Cochain& psi, int cutoff);

}  // namespace conic
