// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The comlie Authors

#ifndef COMLIE_SERIALIZE_HPP
#define COMLIE_SERIALIZE_HPP

#include <filesystem>

#include <nlohmann/json.hpp>

#include "comlie/algebra.hpp"
#include "comlie/cochain.hpp"
#include "comlie/cohomology.hpp"
#include "comlie/cup.hpp"
#include "comlie/morse.hpp"

namespace comlie {

using json = nlohmann::ordered_json;

/// {"characteristic": 2, "degree": k, "modulus": m}
json to_json(Field f);
Field field_from_json(const json& j);

/// {"field": ..., "dim": d, "basis": [...], "brackets": [{"i", "j", "value": {"k": "hex"}}]}
json to_json(const Algebra& a);
/// Parses an algebra document. Errors: "parse" for malformed input,
/// "duplicate-pair" when a pair {i, j} appears twice, "jacobi" (naming a
/// violating triple) when the result fails check_axioms().
Algebra algebra_from_json(const json& j);
Algebra import_algebra(const std::filesystem::path& path);

/// {"dim": m, "kind": "...", "actions": [[["hex", ...], ...], ...]} (one matrix per basis element)
json to_json(const Module& m);
Module module_from_json(const Algebra& a, const json& j);

/// Nonzero coefficients as [{"args": [names], "module": r, "value": "hex"}].
json to_json(const Cochain& c);

/// {"degree", "flavor", "dimZ", "dimB", "dimH", "representatives": [...]}
json to_json(const CohomologyResult& r);
json to_json(const InducedMap& m);
json to_json(const ExactSequenceReport& r);
json to_json(const Fingerprint& f);
json to_json(const GradedFamilyReport& r);

/// {"degrees": [{"degree", "labels"}], "products": [{"lhs", "rhs", "result": {label: hex}}]}
json to_json(const RingTable& t);

/// [[lower label, upper label], ...]
json matching_to_json(const ComplexGraph& g, const Matching& m);
Matching matching_from_json(const ComplexGraph& g, const json& j);
json to_json(const MatchingReport& r, const ComplexGraph& g);
json to_json(const MorseComplex& m);

/// Reads a whole file; throws Error("io") on failure.
std::string read_file(const std::filesystem::path& path);
/// Writes through a temporary file in the same directory and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace comlie

#endif  // COMLIE_SERIALIZE_HPP
