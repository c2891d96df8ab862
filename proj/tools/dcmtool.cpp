// Copyright 2026 The dcmkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// dcmtool: compute, screen, recognize and construct distance-count matrices.
//
// Exit codes: 0 yes/pass, 1 no/reject, 2 error, 3 unknown.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dcm/dcm.hpp"

namespace {

enum Exit : int { kOk = 0, kNo = 1, kError = 2, kUnknown = 3 };

struct Options {
  std::string input;
  std::string output = "-";

  bool cumulative = false;
  bool canonical = false;

  std::string kind;
  std::string mode = "directed";
  bool exact_bounds = false;
  std::uint64_t subset_budget = 1'000'000;
  bool require_strong = false;
  bool machine = false;

  std::size_t max_n = 10;
  double timeout_s = 60.0;
  std::uint64_t max_nodes = 500'000'000;
  bool permute = false;

  std::string solution;
  bool solve = false;

  std::string method = "hh";
  bool realize = false;

  std::string level = "lenient";
  std::int64_t gap = 3;

  std::size_t nodes = 6;
  double probability = 0.4;
  std::uint64_t seed = 1;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw dcm::Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

dcm::Orientation orientation_of(const std::string& mode) {
  return mode == "undirected" ? dcm::Orientation::undirected : dcm::Orientation::directed;
}

dcm::AnyMatrix load_matrix(const Options& opt) {
  auto m = dcm::parse_matrix(read_input(opt.input));
  if (!opt.kind.empty()) {
    const auto wanted = opt.kind == "cdcm" ? dcm::MatrixKind::cdcm : dcm::MatrixKind::dcm;
    if (dcm::kind_of(m) != wanted) {
      throw dcm::Error(std::string("--kind ") + opt.kind + " contradicts the file's " +
                       dcm::kind_name(dcm::kind_of(m)) + " marker");
    }
  }
  return m;
}

std::vector<dcm::Count> to_counts(const std::vector<std::int64_t>& values) {
  std::vector<dcm::Count> out;
  for (auto v : values) {
    if (v < 0 || v > std::numeric_limits<dcm::Count>::max()) {
      throw dcm::Error("sequence entry " + std::to_string(v) + " is not a natural number");
    }
    out.push_back(static_cast<dcm::Count>(v));
  }
  return out;
}

int cmd_compute(const Options& opt, std::ostream& out) {
  const auto g = dcm::parse_graph(read_input(opt.input));
  if (opt.cumulative) {
    auto m = dcm::cdcm_of(g);
    dcm::write_matrix(out, opt.canonical ? dcm::canonicalize(m) : m);
  } else {
    auto m = dcm::dcm_of(g);
    dcm::write_matrix(out, opt.canonical ? dcm::canonicalize(m) : m);
  }
  return kOk;
}

int cmd_check(const Options& opt, std::ostream& out) {
  const auto m = load_matrix(opt);
  dcm::ScreenConfig cfg;
  cfg.orientation = orientation_of(opt.mode);
  cfg.require_strong = opt.require_strong;
  cfg.bounds.mode = opt.exact_bounds ? dcm::BoundMode::exact : dcm::BoundMode::relaxed;
  cfg.bounds.subset_budget = opt.subset_budget;
  const auto report = dcm::screen(m, cfg);
  out << (opt.machine ? dcm::render_machine(report) : dcm::render_text(report));
  return report.passed() ? kOk : kNo;
}

int cmd_recognize(const Options& opt, std::ostream& out) {
  const auto m = load_matrix(opt);
  dcm::SearchLimits limits;
  limits.max_n = opt.max_n;
  limits.time_budget = std::chrono::milliseconds(static_cast<std::int64_t>(opt.timeout_s * 1000));
  limits.node_budget = opt.max_nodes;
  limits.policy = opt.permute ? dcm::MatchPolicy::up_to_permutation : dcm::MatchPolicy::fixed_rows;
  const auto outcome = dcm::recognize(m, orientation_of(opt.mode), limits);
  out << "# verdict=" << dcm::verdict_name(outcome.verdict) << '\n';
  out << "# explored=" << outcome.stats.explored << " elapsed_ms=" << outcome.stats.elapsed_ms
      << '\n';
  if (!outcome.reason.empty()) out << "# reason=" << outcome.reason << '\n';
  if (outcome.witness) dcm::write_graph(out, *outcome.witness);
  switch (outcome.verdict) {
    case dcm::Verdict::yes: return kOk;
    case dcm::Verdict::no: return kNo;
    case dcm::Verdict::unknown: return kUnknown;
  }
  return kError;
}

int cmd_reduce(const Options& opt, std::ostream& out) {
  const auto a = dcm::parse_tpp(read_input(opt.input));
  dcm::write_matrix(out, dcm::build_matrix(a));
  return kOk;
}

int cmd_validate(const Options& opt, std::ostream& out) {
  const auto a = dcm::parse_tpp(read_input(opt.input));
  dcm::ValidationLevel level = dcm::ValidationLevel::lenient();
  if (opt.level == "tpp") level = dcm::ValidationLevel::tpp();
  if (opt.level == "hardened") level = dcm::ValidationLevel::hardened(opt.gap);
  const auto verdict = dcm::validate_instance(a.values(), level);
  if (verdict.ok) {
    out << "PASS\n";
    return kOk;
  }
  out << "REJECT " << verdict.rule << ' ' << verdict.detail << '\n';
  return kNo;
}

int cmd_gadget(const Options& opt, std::ostream& out) {
  const auto a = dcm::parse_tpp(read_input(opt.input));
  dcm::TppSolution sol;
  if (opt.solve) {
    const auto outcome = dcm::solve_tpp(a);
    if (outcome.status == dcm::TppStatus::unknown) {
      std::cerr << "dcmtool: instance too large to solve\n";
      return kUnknown;
    }
    if (outcome.status == dcm::TppStatus::negative) {
      out << "negative\n";
      return kNo;
    }
    sol = *outcome.solution;
  } else {
    sol = dcm::parse_solution(read_input(opt.solution));
  }
  const auto gadget = dcm::build_gadget(a, sol);
  std::vector<std::string> comments;
  for (std::size_t v = 0; v < gadget.layout.roles.size(); ++v) {
    comments.push_back("node " + std::to_string(v) + " role " + gadget.layout.roles[v].label());
  }
  dcm::write_graph(out, gadget.graph, comments);
  return kOk;
}

int cmd_solve_tpp(const Options& opt, std::ostream& out) {
  const auto a = dcm::parse_tpp(read_input(opt.input));
  const auto outcome = dcm::solve_tpp(a);
  switch (outcome.status) {
    case dcm::TppStatus::positive:
      dcm::write_solution(out, a, *outcome.solution);
      return kOk;
    case dcm::TppStatus::negative:
      out << "negative\n";
      return kNo;
    case dcm::TppStatus::unknown:
      out << "unknown\n";
      return kUnknown;
  }
  return kError;
}

int cmd_realize_good(const Options& opt, std::ostream& out) {
  const auto values = to_counts(dcm::parse_sequence(read_input(opt.input)));
  dcm::write_graph(out, dcm::realize_good_sequence(dcm::GoodSequence(values)));
  return kOk;
}

int cmd_degseq(const Options& opt, std::ostream& out) {
  const auto d = dcm::DegreeSequence::sorted(to_counts(dcm::parse_sequence(read_input(opt.input))));
  if (opt.method == "eg") {
    const bool ok = dcm::erdos_gallai_check(d);
    out << (ok ? "graphical" : "not graphical") << '\n';
    if (ok && opt.realize) dcm::write_graph(out, *dcm::havel_hakimi(d).graph);
    return ok ? kOk : kNo;
  }
  if (opt.method == "in") {
    for (auto v : d.values()) {
      if (v >= d.size()) {
        out << "not realizable without self-loops\n";
        return kNo;
      }
    }
    out << "realizable\n";
    if (opt.realize) dcm::write_graph(out, dcm::indegree_realize(d));
    return kOk;
  }
  const auto result = dcm::havel_hakimi(d);
  if (!result.accepted()) {
    out << "not graphical\n# step=" << result.failed_step << ' ' << result.reason << '\n';
    return kNo;
  }
  out << "graphical\n";
  if (opt.realize) dcm::write_graph(out, *result.graph);
  return kOk;
}

int cmd_random(const Options& opt, std::ostream& out) {
  std::mt19937_64 rng(opt.seed);
  dcm::write_graph(out, dcm::random_graph(opt.nodes, opt.probability, orientation_of(opt.mode), rng));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance-count matrices: compute, screen, recognize, reduce"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("-o,--output", opt.output, "Output file (default: standard output)");

  const std::vector<std::string> kinds{"dcm", "cdcm"};
  const std::vector<std::string> modes{"directed", "undirected"};
  std::map<CLI::App*, int (*)(const Options&, std::ostream&)> handlers;

  auto* compute = app.add_subcommand("compute", "DCM (or CDCM) of a graph file");
  compute->add_option("graph", opt.input, "Graph file, - for stdin")->required();
  compute->add_flag("--cumulative", opt.cumulative, "Emit the cumulative matrix");
  compute->add_flag("--canonical", opt.canonical, "Sort rows lexicographically");
  handlers[compute] = cmd_compute;

  auto* check = app.add_subcommand("check", "Screen a candidate matrix with necessary conditions");
  check->add_option("matrix", opt.input, "Matrix file, - for stdin")->required();
  check->add_option("--kind", opt.kind, "Expected matrix kind")->check(CLI::IsMember(kinds));
  check->add_option("--mode", opt.mode, "Graph orientation")->check(CLI::IsMember(modes));
  check->add_flag("--exact-bounds", opt.exact_bounds, "Exact predecessor subset search");
  check->add_option("--subset-budget", opt.subset_budget, "Search nodes per row for --exact-bounds");
  check->add_flag("--require-strong", opt.require_strong, "Require every row to be very good");
  check->add_flag("--machine", opt.machine, "Line-oriented key=value output");
  handlers[check] = cmd_check;

  auto* recognize = app.add_subcommand("recognize", "Decide whether a matrix is a (C)DCM");
  recognize->add_option("matrix", opt.input, "Matrix file, - for stdin")->required();
  recognize->add_option("--kind", opt.kind, "Expected matrix kind")->check(CLI::IsMember(kinds));
  recognize->add_option("--mode", opt.mode, "Graph orientation")->check(CLI::IsMember(modes));
  recognize->add_option("--max-n", opt.max_n, "Largest matrix to search");
  recognize->add_option("--timeout", opt.timeout_s, "Time budget in seconds");
  recognize->add_option("--max-nodes", opt.max_nodes, "Search node budget");
  recognize->add_flag("--permute", opt.permute, "Match rows up to permutation");
  handlers[recognize] = cmd_recognize;

  auto* reduce = app.add_subcommand("reduce", "Reduction matrix of a three-partition instance");
  reduce->add_option("tpp", opt.input, "Instance file, - for stdin")->required();
  handlers[reduce] = cmd_reduce;

  auto* validate = app.add_subcommand("validate-tpp", "Check a three-partition instance");
  validate->add_option("tpp", opt.input, "Instance file, - for stdin")->required();
  validate->add_option("--level", opt.level, "Strictness")
      ->check(CLI::IsMember({"lenient", "tpp", "hardened"}));
  validate->add_option("--gap", opt.gap, "K for --level hardened");
  handlers[validate] = cmd_validate;

  auto* gadget = app.add_subcommand("gadget", "Witness graph of a solved instance");
  gadget->add_option("tpp", opt.input, "Instance file, - for stdin")->required();
  auto* source = gadget->add_option_group("source", "Where the partition comes from");
  source->add_option("--solution", opt.solution, "Solution file");
  source->add_flag("--solve", opt.solve, "Solve the instance first");
  source->require_option(1);
  handlers[gadget] = cmd_gadget;

  auto* solve = app.add_subcommand("solve-tpp", "Exact three-partition solver");
  solve->add_option("tpp", opt.input, "Instance file, - for stdin")->required();
  handlers[solve] = cmd_solve_tpp;

  auto* realize = app.add_subcommand("realize-good", "Tree whose CDCM row 0 is a good sequence");
  realize->add_option("sequence", opt.input, "Sequence file, - for stdin")->required();
  handlers[realize] = cmd_realize_good;

  auto* degseq = app.add_subcommand("degseq", "Degree sequence realizability");
  degseq->add_option("sequence", opt.input, "Sequence file, - for stdin")->required();
  degseq->add_option("--method", opt.method, "eg, hh, or in (directed in-degrees)")
      ->check(CLI::IsMember({"eg", "hh", "in"}));
  degseq->add_flag("--realize", opt.realize, "Print a realization");
  handlers[degseq] = cmd_degseq;

  auto* random = app.add_subcommand("random", "Random G(n, p) graph");
  random->add_option("--n", opt.nodes, "Node count");
  random->add_option("--p", opt.probability, "Arc probability");
  random->add_option("--mode", opt.mode, "Graph orientation")->check(CLI::IsMember(modes));
  random->add_option("--seed", opt.seed, "Generator seed");
  handlers[random] = cmd_random;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  std::ostringstream buffer;
  int code = kError;
  try {
    for (auto* sub : app.get_subcommands()) code = handlers.at(sub)(opt, buffer);
  } catch (const std::exception& e) {
    std::cerr << "dcmtool: " << e.what() << '\n';
    return kError;
  }

  if (opt.output == "-") {
    std::cout << buffer.str();
  } else {
    std::ofstream file(opt.output);
    if (!(file << buffer.str())) {
      std::cerr << "dcmtool: cannot write " << opt.output << '\n';
      return kError;
    }
  }
  return code;
}
