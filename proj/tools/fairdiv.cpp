#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fairdiv/error.hpp"
#include "fairdiv/fairness.hpp"
#include "fairdiv/fixtures.hpp"
#include "fairdiv/graph.hpp"
#include "fairdiv/io.hpp"
#include "fairdiv/pof.hpp"
#include "fairdiv/protocols.hpp"
#include "fairdiv/separating.hpp"

using namespace fairdiv;
using nlohmann::json;

namespace {

struct Common {
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> cap;
  int workers = 1;
};

std::uint64_t effective_cap(const Common& c) {
  if (c.cap) return *c.cap;
  if (const char* env = std::getenv("FAIRDIV_CAP")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw FairDivError(Errc::kParseError, std::string("FAIRDIV_CAP: not an integer: ") + env);
  }
  return OracleOptions{}.cap;
}

// A file path, or a fixture / family name sized by n.
AgentGraph load_graph(const std::string& spec, std::optional<int> n) {
  if (std::filesystem::exists(spec)) return io::parse_graph(io::load_file(spec), spec);
  auto g = graphs::named(spec, n.value_or(4));
  if (!g) throw FairDivError(Errc::kParseError, "\"" + spec + "\" is neither a file nor a known graph name");
  return *g;
}

std::vector<Valuation> load_valuations(const std::string& path) {
  const json j = io::load_file(path);
  return io::parse_valuations(j.is_object() && j.contains("valuations") ? j["valuations"] : j, path);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json protocol_output(const ProtocolRun& run, std::span<const Valuation> vals, bool trace, bool ledger_only) {
  if (ledger_only) return io::to_json(run.ledger);
  json out = {{"valuations", io::to_json(vals)},
              {"allocation", io::to_json(run.allocation)},
              {"ledger", io::to_json(run.ledger)}};
  if (trace) out["trace"] = io::to_json(std::span<const TraceStep>(run.trace));
  return out;
}

std::vector<Valuation> valuations_or_random(const std::string& path, int n, std::uint64_t seed) {
  if (!path.empty()) return load_valuations(path);
  std::mt19937_64 rng(seed);
  return random_valuations(rng, n);
}

int run(int argc, char** argv) {
  CLI::App app{"Cake cutting with graph-local fairness, exact rational arithmetic."};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--seed", common.seed, "Seed for every random generator")->default_val(0);
  app.add_option("--workers", common.workers, "Oracle worker threads")->default_val(1);
  app.add_option("--cap", common.cap, "Maximum n^m assignments (overrides FAIRDIV_CAP)");

  // verify
  auto* verify = app.add_subcommand("verify", "Check LEF, LP, global EF and global proportionality");
  std::string v_instance, v_vals, v_alloc, v_graph;
  verify->add_option("--instance", v_instance, "JSON with valuations, allocation and graph");
  verify->add_option("--valuations", v_vals, "Valuations JSON");
  verify->add_option("--allocation", v_alloc, "Allocation JSON");
  verify->add_option("--graph", v_graph, "Graph JSON or fixture name");

  // protocol1
  auto* p1 = app.add_subcommand("protocol1", "Single-cutter protocol on a cone over a DAG");
  std::string p1_graph = "cone_dag", p1_vals;
  int p1_n = 4;
  std::optional<int> p1_apex;
  bool p1_trace = false, p1_ledger = false;
  p1->add_option("--graph,--fixture", p1_graph, "Graph JSON or fixture name")->default_val("cone_dag");
  p1->add_option("--n", p1_n, "Agents for named graphs and random valuations")->default_val(4);
  p1->add_option("--valuations", p1_vals, "Valuations JSON (random from --seed when absent)");
  p1->add_option("--apex", p1_apex, "Cutter (default: smallest cone apex)");
  p1->add_flag("--trace", p1_trace, "Include the step-by-step trace");
  p1->add_flag("--ledger", p1_ledger, "Emit only the query ledger");

  // cut-and-choose
  auto* cc = app.add_subcommand("cut-and-choose", "Two-agent cut and choose");
  std::string cc_vals;
  bool cc_trace = false, cc_ledger = false;
  cc->add_option("--valuations", cc_vals, "Two valuations (random from --seed when absent)");
  cc->add_flag("--trace", cc_trace, "Include the step-by-step trace");
  cc->add_flag("--ledger", cc_ledger, "Emit only the query ledger");

  // extend
  auto* ext = app.add_subcommand("extend", "Extend an envy-free partial allocation");
  std::string ext_input, ext_fixture;
  bool ext_trace = false, ext_ledger = false;
  ext->add_option("--input", ext_input, "JSON with valuations and partial_allocation");
  ext->add_option("--fixture", ext_fixture, "domination | example_a1")
      ->check(CLI::IsMember({"domination", "example_a1"}));
  ext->add_flag("--trace", ext_trace, "Include the residue protocol trace");
  ext->add_flag("--ledger", ext_ledger, "Emit only the query ledger");

  // adversary
  auto* adv = app.add_subcommand("adversary", "Envy forced on a single-cutter protocol by a cycle");
  std::string adv_graph = "complete", adv_pieces, adv_assign;
  int adv_n = 4, adv_cutter = 0, adv_t = 2;
  adv->add_option("--graph", adv_graph, "Graph JSON or fixture name")->default_val("complete");
  adv->add_option("--n", adv_n, "Agents for named graphs")->default_val(4);
  adv->add_option("--cutter", adv_cutter, "Cutting agent")->default_val(0);
  adv->add_option("--pieces", adv_pieces, "JSON list of pieces (default: t equal intervals)");
  adv->add_option("--t", adv_t, "Number of equal pieces when --pieces is absent")->default_val(2);
  adv->add_option("--assignment", adv_assign, "Comma-separated holder of each piece (default: 1,2,...)");

  // separate
  auto* sep = app.add_subcommand("separate", "Instance that is LP on G but not on H");
  sep->set_help_flag("--help", "Print this help message and exit");
  std::string sep_g, sep_h;
  int sep_n = 4;
  sep->add_option("--g", sep_g, "Graph G (file or name)")->required();
  sep->add_option("--h", sep_h, "Graph H (file or name)")->required();
  sep->add_option("--n", sep_n, "Agents for named graphs")->default_val(4);

  // pof-partition
  auto* pp = app.add_subcommand("pof-partition", "Linked partition of a connected graph");
  std::string pp_graph;
  std::optional<int> pp_n, pp_k;
  std::string pp_eps = "1/2";
  bool pp_sub = false;
  pp->add_option("--graph", pp_graph, "Graph JSON or family name")->required();
  pp->add_option("--n", pp_n, "Nodes for family names");
  pp->add_option("--k", pp_k, "Hub count (default floor(sqrt(n)))");
  pp->add_option("--epsilon", pp_eps, "epsilon as p/q")->default_val("1/2");
  pp->add_flag("--sub", pp_sub, "Emit the subpartition before completion");

  // pof-experiment
  auto* pe = app.add_subcommand("pof-experiment", "Welfare rows for the price of envy-freeness");
  std::vector<int> pe_n;
  std::string pe_graph = "path", pe_format = "csv";
  std::optional<int> pe_atoms;
  pe->add_option("--n", pe_n, "Node counts, comma separated")->required()->delimiter(',');
  pe->add_option("--graph", pe_graph, "Family: path, star, binary-tree, grid, cycle, complete, random")
      ->default_val("path");
  pe->add_option("--atoms", pe_atoms, "Enumerate LEF allocations on this many equal atoms");
  pe->add_option("--format", pe_format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->default_val("csv");

  // oracle
  auto* orc = app.add_subcommand("oracle", "Brute-force best welfare under a fairness criterion");
  std::string orc_vals, orc_graph, orc_crit = "lef";
  int orc_atoms = 0;
  orc->add_option("--valuations", orc_vals, "Valuations JSON")->required();
  orc->add_option("--graph", orc_graph, "Graph JSON or fixture name")->required();
  orc->add_option("--atoms", orc_atoms, "Equal atoms")->required();
  orc->add_option("--criterion", orc_crit, "any | lef | lp")->check(CLI::IsMember({"any", "lef", "lp"}))
      ->default_val("lef");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*verify) {
    json in;
    if (!v_instance.empty()) in = io::load_file(v_instance);
    const auto vals = !v_vals.empty() ? load_valuations(v_vals) : io::parse_valuations(in.value("valuations", json()), "valuations");
    const auto alloc = !v_alloc.empty() ? io::parse_allocation(io::load_file(v_alloc), v_alloc)
                                        : io::parse_allocation(in.value("allocation", json()), "allocation");
    const auto g = !v_graph.empty() ? load_graph(v_graph, static_cast<int>(vals.size()))
                                    : io::parse_graph(in.value("graph", json()), "graph");
    emit({{"locally_envy_free", io::to_json(is_locally_envy_free(alloc, g, vals))},
          {"locally_proportional", io::to_json(is_locally_proportional(alloc, g, vals))},
          {"globally_envy_free", io::to_json(is_globally_envy_free(alloc, vals))},
          {"globally_proportional", io::to_json(is_globally_proportional(alloc, vals))}});
  } else if (*p1) {
    const auto g = load_graph(p1_graph, p1_n);
    const auto vals = valuations_or_random(p1_vals, g.n(), common.seed);
    std::optional<int> apex = p1_apex ? p1_apex : cone_apex(g);
    if (!apex) throw FairDivError(Errc::kNotConeApex, "graph has no cone apex");
    const auto agents = make_agents(vals);
    const auto run = protocol1(agents, g, *apex);
    json out = protocol_output(run, vals, p1_trace, p1_ledger);
    if (!p1_ledger) out["apex"] = *apex;
    emit(out);
  } else if (*cc) {
    const auto vals = valuations_or_random(cc_vals, 2, common.seed);
    const auto agents = make_agents(vals);
    emit(protocol_output(cut_and_choose(agents), vals, cc_trace, cc_ledger));
  } else if (*ext) {
    ExtensionInstance inst = ext_fixture == "example_a1" ? example_a1_fixture() : domination_fixture();
    if (!ext_input.empty()) {
      const json in = io::load_file(ext_input);
      inst = {io::parse_valuations(in.value("valuations", json()), "valuations"),
              io::parse_partial_allocation(in.value("partial_allocation", json()), "partial_allocation")};
    } else if (ext_fixture.empty()) {
      throw FairDivError(Errc::kInvalidArgument, "extend needs --input or --fixture");
    }
    const auto r = extend_partial(inst.partial, inst.valuations);
    json out = protocol_output(r.run, inst.valuations, ext_trace, ext_ledger);
    if (!ext_ledger) {
      out["partial_allocation"] = io::to_json(inst.partial);
      out["domination"] = io::to_json(r.domination);
      out["component"] = r.component;
      out["apex"] = r.apex;
      out["globally_envy_free"] = io::to_json(is_globally_envy_free(r.run.allocation, inst.valuations));
    }
    emit(out);
  } else if (*adv) {
    const auto g = load_graph(adv_graph, adv_n);
    std::vector<Piece> pieces;
    if (!adv_pieces.empty()) {
      const json pj = io::load_file(adv_pieces);
      for (std::size_t r = 0; r < pj.size(); ++r) pieces.push_back(io::parse_piece(pj[r], "pieces[" + std::to_string(r) + "]"));
    } else {
      if (adv_t < 1) throw FairDivError(Errc::kInvalidArgument, "--t must be positive");
      for (int r = 0; r < adv_t; ++r) pieces.push_back(Piece::interval(Rational(r, adv_t), Rational(r + 1, adv_t)));
    }
    std::vector<int> assignment;
    if (!adv_assign.empty()) {
      std::stringstream ss(adv_assign);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        try {
          assignment.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          throw FairDivError(Errc::kParseError, "--assignment: \"" + tok + "\" is not an integer");
        }
      }
    } else {
      for (std::size_t r = 0; r < pieces.size(); ++r) assignment.push_back(static_cast<int>((adv_cutter + 1 + r) % g.n()));
    }
    const auto w = demonstrate_single_cutter_failure(g, adv_cutter, pieces, assignment);
    json out = {{"valuation", io::to_json(single_cutter_adversary(pieces))}, {"witness", nullptr}};
    if (w) {
      out["witness"] = {{"envious", w->envious},
                        {"envied", w->envied},
                        {"envious_value", io::to_json(w->envious_value)},
                        {"envied_value", io::to_json(w->envied_value)},
                        {"cycle", w->cycle}};
    }
    emit(out);
  } else if (*sep) {
    const auto g = load_graph(sep_g, sep_n);
    const auto h = load_graph(sep_h, sep_n);
    const auto inst = separate_lp(g, h);
    emit({{"instance", io::to_json(inst)},
          {"report_g", io::to_json(is_locally_proportional(inst.allocation, inst.holds_on, inst.valuations))},
          {"report_h", io::to_json(is_locally_proportional(inst.allocation, inst.fails_on, inst.valuations))}});
  } else if (*pp) {
    const auto g = std::filesystem::exists(pp_graph) ? load_graph(pp_graph, std::nullopt)
                                                     : generate_graph(pp_graph, pp_n.value_or(9), common.seed);
    int k = pp_k.value_or(0);
    if (!pp_k) {
      while ((k + 1) * (k + 1) <= g.n()) ++k;
    }
    const auto sub = linked_subpartition(g, k, Rational::parse(pp_eps));
    emit(io::to_json(pp_sub ? sub : complete_partition(sub, g)));
  } else if (*pe) {
    PofOptions opts;
    opts.atoms = pe_atoms;
    opts.oracle.cap = effective_cap(common);
    opts.oracle.workers = common.workers;
    json rows = json::array();
    if (pe_format == "csv") std::cout << "n,k,optimal,oracle_best_lef,bound,ratio\n";
    for (int n : pe_n) {
      const auto ex = pof_experiment(generate_graph(pe_graph, n, common.seed), opts);
      const std::string best = ex.summary.from_oracle ? ex.summary.fair_welfare.str() : "";
      if (pe_format == "csv") {
        std::cout << ex.n << "," << ex.k << "," << ex.summary.optimal_welfare.str() << "," << best << ","
                  << ex.bound.str() << "," << ex.summary.ratio.str() << "\n";
      } else {
        rows.push_back({{"n", ex.n},
                        {"k", ex.k},
                        {"graph", pe_graph},
                        {"summary", io::to_json(ex.summary)},
                        {"bound", io::to_json(ex.bound)},
                        {"lef_allocations", ex.lef_allocations},
                        {"certificate_failures", ex.certificate_failures}});
      }
    }
    if (pe_format == "json") emit(rows);
  } else if (*orc) {
    const auto vals = load_valuations(orc_vals);
    const auto g = load_graph(orc_graph, static_cast<int>(vals.size()));
    const Criterion crit = orc_crit == "any" ? Criterion::kAny
                           : orc_crit == "lp" ? Criterion::kLocallyProportional
                                              : Criterion::kLocallyEnvyFree;
    const auto r = brute_force_best_fair_welfare(vals, g, orc_atoms, crit,
                                                 OracleOptions{effective_cap(common), common.workers});
    emit({{"welfare", io::to_json(r.welfare)},
          {"allocation", io::to_json(r.allocation)},
          {"feasible", r.feasible},
          {"enumerated", r.enumerated},
          {"optimal_welfare", io::to_json(optimal_welfare(vals).welfare)}});
  }
  return 0;
}

int exit_code(Errc code) {
  switch (code) {
    case Errc::kParseError: return 2;
    case Errc::kTooLarge: return 3;
    default: return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const FairDivError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const json::exception& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return 2;
  }
}
