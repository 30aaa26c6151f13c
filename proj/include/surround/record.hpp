#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "surround/bounds.hpp"
#include "surround/solver.hpp"

namespace surround {

// Names used in CLI flags, JSON output, and file headers.
std::string variant_name(Variant v);
std::string mode_name(RefineMode m);
Variant variant_from_name(const std::string& name);    // parse_error on unknown
RefineMode mode_from_name(const std::string& name);    // parse_error on unknown

// 64-bit FNV-1a of raw bytes, rendered as 16 lowercase hex digits. Used to
// stamp result records with the exact input file they were computed from.
std::string fnv1a_digest(std::string_view bytes);

// Machine-readable result of a single game-number computation.
struct ResultRecord {
    std::string graph;    // human-readable source, e.g. "gp(7,2)" or "file:g.g6"
    std::string digest;   // optional input digest, empty when not file-based
    Variant variant = Variant::surround;
    RefineMode mode = RefineMode::worklist;
    GameNumberResult result;
};

nlohmann::json to_json(const ResultRecord& rec);

nlohmann::json bracket_json(const Bracket& b, const LowerBounds& lo, const UpperBounds& hi);

}  // namespace surround
