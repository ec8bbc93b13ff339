#include "pap/fpap_solver.hpp"
#include "pap/generator.hpp"
#include "pap/io.hpp"
#include "pap/oracle.hpp"
#include "pap/render.hpp"
#include "pap/rollout.hpp"

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

struct OutputOptions {
  std::string format = "text";
  std::string solution_path;
};

void add_output_options(CLI::App* cmd, OutputOptions* options) {
  cmd->add_option("--format", options->format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", options->solution_path,
                  "Write the solution file to this path");
}

void emit_report(const pap::SolveReport& report, const pap::Instance& instance,
                 const OutputOptions& options) {
  pap::SolutionFile solution = pap::to_solution_file(report, instance);
  if (!options.solution_path.empty()) {
    pap::write_text_file(options.solution_path, pap::emit_solution(solution));
  }
  if (options.format == "machine") {
    std::cout << pap::emit_solution(solution);
  } else {
    std::cout << pap::render_schedule(report, instance);
  }
}

ordered_json interval_json(const pap::IdleInterval& interval) {
  return ordered_json{{"start", interval.start}, {"end", interval.end}};
}

int run(int argc, char** argv) {
  CLI::App app{"Solvers for the periodic assignment problem and its fair variant"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string solution_path;
  OutputOptions output;

  auto* solve = app.add_subcommand("solve", "Worker-minimal periodic assignment");
  solve->add_option("instance", instance_path, "Instance file")->required();
  add_output_options(solve, &output);
  solve->callback([&] {
    pap::Instance instance = pap::load_instance_file(instance_path);
    emit_report(pap::shift_sort_and_match(instance), instance, output);
  });

  auto* fair = app.add_subcommand("fair", "Worker-minimal fair assignment");
  fair->add_option("instance", instance_path, "Instance file")->required();
  add_output_options(fair, &output);
  fair->callback([&] {
    pap::Instance instance = pap::load_instance_file(instance_path);
    emit_report(pap::patching(instance), instance, output);
  });

  auto* nn = app.add_subcommand("nn", "Nearest neighbor fair heuristic");
  nn->add_option("instance", instance_path, "Instance file")->required();
  pap::TaskId start_id = -1;
  nn->add_option("--start", start_id, "Start task id (default: lowest id)");
  add_output_options(nn, &output);
  nn->callback([&] {
    pap::Instance instance = pap::load_instance_file(instance_path);
    pap::SolveReport report = nn->count("--start") != 0
                                  ? pap::nearest_neighbor(instance, start_id)
                                  : pap::nearest_neighbor(instance);
    emit_report(report, instance, output);
  });

  auto* oracle = app.add_subcommand("oracle", "Brute-force reference solvers");
  oracle->add_option("instance", instance_path, "Instance file")->required();
  bool oracle_pap = false;
  bool oracle_fpap = false;
  std::int64_t cap_override = -1;
  oracle->add_flag("--pap", oracle_pap, "Assignment-problem oracle");
  oracle->add_flag("--fpap", oracle_fpap, "Held-Karp fair oracle");
  oracle->add_option("--cap", cap_override, "Override the instance size cap");
  add_output_options(oracle, &output);
  oracle->callback([&] {
    if (oracle_pap == oracle_fpap) {
      throw pap::input_error("oracle: pass exactly one of --pap or --fpap");
    }
    pap::Instance instance = pap::load_instance_file(instance_path);
    pap::OracleCaps caps;
    if (cap_override >= 0) {
      if (oracle_pap) caps.pap = static_cast<std::size_t>(cap_override);
      if (oracle_fpap) caps.fpap = static_cast<std::size_t>(cap_override);
    }
    pap::SolveReport report = oracle_pap ? pap::pap_oracle(instance, caps)
                                         : pap::fpap_oracle(instance, caps);
    emit_report(report, instance, output);
  });

  auto* check = app.add_subcommand("check", "Verify a solution file");
  check->add_option("instance", instance_path, "Instance file")->required();
  check->add_option("solution", solution_path, "Solution file")->required();
  check->callback([&] {
    pap::Instance instance = pap::load_instance_file(instance_path);
    pap::SolutionFile solution =
        pap::parse_solution(pap::read_text_file(solution_path));
    std::vector<std::string> problems = pap::check_solution(instance, solution);
    if (problems.empty()) {
      std::cout << "ok\n";
      return;
    }
    for (const std::string& problem : problems) {
      std::cout << "mismatch: " << problem << "\n";
    }
    throw pap::input_error("solution failed verification");
  });

  auto* gen = app.add_subcommand("gen", "Generate a seeded instance");
  std::string family_name = "uniform";
  pap::GeneratorSpec spec;
  std::string gen_output;
  gen->add_option("--family", family_name, "uniform | layered-disconnected | layered-connected")
      ->capture_default_str();
  gen->add_option("--n", spec.n, "Task count (uniform)");
  gen->add_option("--period", spec.period, "Period length")->required();
  gen->add_option("--seed", spec.seed, "Random seed (uniform)");
  gen->add_option("--layers", spec.layers, "Layer count (layered families)");
  gen->add_option("-o,--output", gen_output, "Write the instance here (default: stdout)");
  gen->callback([&] {
    spec.family = pap::parse_family(family_name);
    pap::Instance instance = pap::generate(spec);
    std::string text = pap::emit_instance(instance);
    if (gen_output.empty()) {
      std::cout << text;
    } else {
      pap::write_text_file(gen_output, text);
    }
  });

  auto* diagnose = app.add_subcommand(
      "diagnose", "Idle intervals, graph connectivity and price of fairness");
  diagnose->add_option("instance", instance_path, "Instance file")->required();
  std::string diag_format = "text";
  diagnose->add_option("--format", diag_format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();
  diagnose->callback([&] {
    pap::Instance instance = pap::load_instance_file(instance_path);
    pap::IdleIntervalGraph graph = pap::idle_interval_graph(instance);
    std::size_t components = pap::weak_component_count(graph);
    pap::PriceOfFairness price = pap::price_of_fairness(instance);

    if (diag_format == "machine") {
      ordered_json j;
      j["load"] = price.load;
      j["idle_intervals"] = ordered_json::array();
      for (const auto& interval : graph.nodes) {
        j["idle_intervals"].push_back(interval_json(interval));
      }
      j["arcs"] = ordered_json::array();
      for (const auto& arc : graph.arcs) {
        j["arcs"].push_back(ordered_json{
            {"task", instance.task(arc.task).id},
            {"from", interval_json(graph.nodes[arc.tail])},
            {"to", interval_json(graph.nodes[arc.head])}});
      }
      j["weak_components"] = components;
      j["fairness_feasible_at_L"] = components == 1;
      j["fair_workers"] = price.fair_workers;
      j["extra_workers"] = price.delta;
      j["price_of_fairness"] =
          ordered_json{{"num", price.ratio_num}, {"den", price.ratio_den}};
      std::cout << j.dump(2) << "\n";
      return;
    }

    std::cout << "load: " << price.load << "\n";
    std::cout << "idle intervals (" << graph.nodes.size() << "):";
    for (const auto& interval : graph.nodes) {
      std::cout << " [" << interval.start << "," << interval.end << "]";
    }
    std::cout << "\n";
    std::cout << "graph: " << graph.arcs.size() << " arcs, " << components
              << " weak component" << (components == 1 ? "" : "s") << "\n";
    std::cout << "fair with L workers: " << (components == 1 ? "yes" : "no")
              << "\n";
    std::cout << "fair workers: " << price.fair_workers
              << " (price of fairness " << price.ratio_num << "/"
              << price.ratio_den << ")\n";
  });

  auto* rollout = app.add_subcommand(
      "rollout", "Finite window of the rolled-out idle interval graph");
  rollout->add_option("instance", instance_path, "Instance file")->required();
  std::int64_t periods = 2;
  rollout->add_option("--periods", periods, "Window length in periods")
      ->required();
  std::string rollout_format = "text";
  rollout->add_option("--format", rollout_format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();
  rollout->callback([&] {
    pap::Instance instance = pap::load_instance_file(instance_path);
    pap::RolledOutGraph graph = pap::build_rollout(instance, periods);
    std::size_t dangling = 0;
    for (const auto& arc : graph.arcs) {
      if (arc.dangling) ++dangling;
    }
    std::int64_t balanced = pap::balanced_min_workers(instance);
    bool agrees = periods >= 2
                      ? pap::check_connectivity_equivalence(instance, periods)
                      : true;

    if (rollout_format == "machine") {
      ordered_json j;
      j["periods"] = graph.periods;
      j["nodes"] = graph.nodes.size();
      j["arcs"] = graph.arcs.size();
      j["dangling_arcs"] = dangling;
      j["balanced_min_workers"] = balanced;
      j["window_agrees_with_periodic"] = agrees;
      std::cout << j.dump(2) << "\n";
      return;
    }
    std::cout << "window: " << graph.periods << " periods, "
              << graph.nodes.size() << " nodes, " << graph.arcs.size()
              << " arcs (" << dangling << " dangling)\n";
    std::cout << "balanced minimum workers: " << balanced << "\n";
    std::cout << "window connectivity agrees with periodic graph: "
              << (agrees ? "yes" : "no") << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const pap::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const pap::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
