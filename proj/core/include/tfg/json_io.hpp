#pragma once

#include <string>

#include "tfg/belt.hpp"
#include "tfg/codebook.hpp"
#include "tfg/element.hpp"
#include "tfg/lookahead.hpp"
#include "tfg/raag.hpp"
#include "tfg/simulate.hpp"
#include "tfg/sofic.hpp"
#include "tfg/verify.hpp"

namespace tfg {

inline constexpr int kSchemaVersion = 1;

// Serialization keeps a stable field order so reports with equal inputs are
// byte-identical. All functions emit or consume UTF-8 JSON text.

std::string shift_space_to_json(const ShiftSpace& space);
ShiftSpace shift_space_from_json(const std::string& text);

std::string codebook_to_json(const Codebook& book);
Codebook codebook_from_json(const std::string& text);

/// {schema, radius, domain, entries: word -> int}; declared bounds, when
/// present, are validated against the table (BoundsUnsound).
std::string table_to_json(const TableNode& table);
std::shared_ptr<const TableNode> table_from_json(const std::string& text);

std::string verify_outcome_to_json(const VerifyOutcome& outcome);

std::string graph_spec_to_json(const GraphProductSpec& spec);
GraphProductSpec graph_spec_from_json(const std::string& text);

std::string raag_report_to_json(const GraphProductReport& report);

std::string scheme_to_json(const EmbeddingScheme& scheme);

std::string profile_to_json(const LookAheadProfile& profile);

std::string trace_to_json(const OrbitTrace& trace);

}  // namespace tfg
