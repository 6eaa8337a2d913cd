#ifndef FAIRDIV_IO_HPP_
#define FAIRDIV_IO_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "fairdiv/agents.hpp"
#include "fairdiv/cake.hpp"
#include "fairdiv/fairness.hpp"
#include "fairdiv/graph.hpp"
#include "fairdiv/pof.hpp"
#include "fairdiv/protocols.hpp"
#include "fairdiv/separating.hpp"

// JSON wire format, see docs/formats.md. Every parse function throws
// kParseError naming the offending field path, e.g. "valuations[2].densities[0]".
namespace fairdiv::io {

using nlohmann::json;

json to_json(const Rational& r);
json to_json(const Piece& p);
json to_json(const Valuation& v);
json to_json(const Allocation& a);
json to_json(const PartialAllocation& pa);
json to_json(const AgentGraph& g);
json to_json(const QueryLedger& l);
json to_json(const FairnessReport& r);
json to_json(const TraceStep& s);
json to_json(const SeparatingInstance& s);
json to_json(const LinkedPartition& lp);
json to_json(const WelfareSummary& w);
json to_json(std::span<const Valuation> vals);
json to_json(std::span<const TraceStep> trace);

Rational parse_rational(const json& j, const std::string& where = "$");
Piece parse_piece(const json& j, const std::string& where = "$");
Valuation parse_valuation(const json& j, const std::string& where = "$");
std::vector<Valuation> parse_valuations(const json& j, const std::string& where = "$");
Allocation parse_allocation(const json& j, const std::string& where = "$");
PartialAllocation parse_partial_allocation(const json& j, const std::string& where = "$");
AgentGraph parse_graph(const json& j, const std::string& where = "$");
QueryLedger parse_ledger(const json& j, const std::string& where = "$");
FairnessReport parse_fairness_report(const json& j, const std::string& where = "$");
TraceStep parse_trace_step(const json& j, const std::string& where = "$");
std::vector<TraceStep> parse_trace(const json& j, const std::string& where = "$");
SeparatingInstance parse_separating_instance(const json& j, const std::string& where = "$");
LinkedPartition parse_linked_partition(const json& j, const std::string& where = "$");
WelfareSummary parse_welfare_summary(const json& j, const std::string& where = "$");

// Parses JSON text; syntax errors become kParseError with the byte offset.
json parse_text(const std::string& text, const std::string& source = "<input>");
json load_file(const std::filesystem::path& path);

}  // namespace fairdiv::io

#endif  // FAIRDIV_IO_HPP_
