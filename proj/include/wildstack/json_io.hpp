#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "wildstack/artin_schreier.hpp"
#include "wildstack/cover_algebra.hpp"
#include "wildstack/presentation.hpp"
#include "wildstack/riemann_roch.hpp"
#include "wildstack/stacky.hpp"

namespace wildstack {

using json = nlohmann::ordered_json;

// Places serialize as {"finite": a}, "infinity", or {"generic": "H"}.
json place_to_json(const Place& pl);
Place place_from_json(const json& j, std::int64_t p);

// QDivisor serializes as a list of {place, num, den} in canonical place order.
json qdivisor_to_json(const QDivisor& d);
QDivisor qdivisor_from_json(const json& j, std::int64_t p);

json spec_to_json(const StackyCurveSpec& spec);
StackyCurveSpec spec_from_json(const json& j);
StackyCurveSpec load_spec_file(const std::string& path);

// CLI report payloads; goldens compare against dump() of these.
json branch_report(const BranchData& bd);
json reduce_report(const ASReduction& red, std::int64_t p);
json cover_genus_report(const BranchData& bd, std::int64_t coarse_genus, std::int64_t genus);
json genus_report(const StackyCurveSpec& spec);
json presentation_report_json(const PresentationReport& report);
json hilbert_row_json(const HilbertRow& row);
json verify_local_report(std::int64_t p, std::int64_t m, const FpPoly& g,
                         const std::optional<LocalCheck>& integral_identity,
                         const LocalCheck& uniformizer);

}  // namespace wildstack
