#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hullcert/certificate.hpp"
#include "hullcert/envelope.hpp"
#include "hullcert/graph.hpp"
#include "hullcert/linear_system.hpp"
#include "hullcert/lp.hpp"
#include "hullcert/split.hpp"
#include "hullcert/suite.hpp"
#include "hullcert/verifier.hpp"
#include "hullcert/wheel.hpp"

using nlohmann::json;
using namespace hullcert;

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Config {
  std::string out;
  std::string x;
  std::string instance;
  std::string certificate;
  std::string family;
  std::string relaxation;
  std::string boundary = "reduce";
  std::vector<int> m;
  std::vector<int> n1;
  std::vector<int> n2;
  std::uint64_t seed = 0;
  int samples = 200;
  unsigned threads = 0;
  int max_n = 8;
  int points = 20;
  bool override_guard = false;
  bool verbose = false;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("malformed JSON in '" + path + "': " + e.what());
  }
}

int single(const std::vector<int>& v, const char* name) {
  if (v.size() != 1) throw UsageError(std::string("--") + name + " takes exactly one value here");
  return v.front();
}

// The graph and point a command works on: --instance file, or --family with its size flags.
struct Instance {
  std::optional<Graph> graph;
  std::vector<Rational> x;
};

Instance load_instance(const Config& cfg) {
  Instance inst;
  if (!cfg.instance.empty()) {
    const json j = read_json_file(cfg.instance);
    inst.graph = Graph::from_json(j.contains("graph") ? j.at("graph") : j);
    if (j.contains("x")) inst.x = rationals_from_json(j.at("x"));
  } else if (cfg.family == "wheel" || cfg.family == "even-wheel") {
    inst.graph = Graph::wheel(single(cfg.m, "m"));
  } else if (cfg.family == "split") {
    inst.graph = Graph::complete_split(single(cfg.n1, "n1"), single(cfg.n2, "n2"));
  } else if (!cfg.family.empty()) {
    throw UsageError("unknown --family '" + cfg.family + "' (wheel, split)");
  }
  if (!cfg.x.empty()) inst.x = parse_rational_list(cfg.x);
  if (!inst.graph) throw UsageError("give --instance or --family with its size flags");
  if (inst.x.empty()) throw UsageError("no point given: pass --x or put \"x\" in the instance");
  if (static_cast<int>(inst.x.size()) != inst.graph->n()) {
    throw UsageError("x has " + std::to_string(inst.x.size()) + " coordinates, the graph has " +
                     std::to_string(inst.graph->n()) + " vertices");
  }
  return inst;
}

std::string default_relaxation(const Graph& g) {
  switch (g.family()) {
    case Family::complete_split:
      return "split";
    case Family::wheel:
      return "triangle";
    default:
      return "mccormick";
  }
}

json report(const std::string& command) { return {{"schema", "hullcert-report/1"}, {"command", command}}; }

json cmd_lb(const Config& cfg) {
  const Instance inst = load_instance(cfg);
  const std::string rel = cfg.relaxation.empty() ? default_relaxation(*inst.graph) : cfg.relaxation;
  const LinearSystem sys = relaxation_for(*inst.graph, rel);
  const FixedXResult res = lower_bound(sys, *inst.graph, inst.x);
  json tight = json::array();
  for (int r : res.tight_rows) {
    const auto& row = sys.rows()[static_cast<size_t>(r)];
    tight.push_back({{"row", r}, {"family", to_string(row.family)}, {"note", row.note}});
  }
  json pairs = json::array();
  for (const auto& e : sys.pairs()) pairs.push_back({e.u, e.v});
  json j = report("lb");
  j["graph"] = inst.graph->to_json();
  j["relaxation"] = rel;
  j["x"] = to_json(inst.x);
  j["lb"] = res.value.str();
  j["pairs"] = pairs;
  j["y"] = to_json(res.y);
  j["tight_rows"] = tight;
  j["ok"] = true;
  return j;
}

json cmd_envelope(const Config& cfg) {
  const Instance inst = load_instance(cfg);
  const EnvelopeResult env = envelope(*inst.graph, inst.x, {.max_n = 16, .override_guard = cfg.override_guard});
  json support = json::array();
  for (const auto& [mask, w] : env.support) {
    json v = json::array();
    for (int i = 0; i < inst.graph->n(); ++i) v.push_back((mask >> i) & 1U);
    support.push_back({{"vertex", v}, {"weight", w.str()}});
  }
  json j = report("envelope");
  j["graph"] = inst.graph->to_json();
  j["x"] = to_json(inst.x);
  j["envelope"] = env.value.str();
  j["support"] = support;
  j["ok"] = true;
  return j;
}

json cmd_wheel(const Config& cfg) {
  if (cfg.x.empty()) throw UsageError("wheel-cert needs --x (rim values then the hub)");
  const auto x = parse_rational_list(cfg.x);
  const WheelResult r = wheel_certificate(x);
  json j = report("wheel-cert");
  j.update(to_json(r));
  if (r.certificate) {
    const CertificateCheck check = check_certificate(*r.certificate);
    j["certificate"] = to_json(*r.certificate);
    j["certificate_check"] = to_json(check);
    j["ok"] = r.ok() && check.ok() && check.equality;
  } else {
    j["ok"] = false;
  }
  return j;
}

json cmd_split(const Config& cfg) {
  if (cfg.x.empty()) throw UsageError("split-cert needs --x");
  if (cfg.boundary != "reduce" && cfg.boundary != "perturb") throw UsageError("--boundary is reduce or perturb");
  const auto x = parse_rational_list(cfg.x);
  const SplitOptions opts{.boundary = cfg.boundary == "reduce" ? BoundaryMode::reduce : BoundaryMode::perturb,
                          .post_verify = true};
  const SplitResult r = split_certificate(single(cfg.n1, "n1"), single(cfg.n2, "n2"), x, opts);
  json j = report("split-cert");
  j.update(to_json(r));
  bool ok = r.ok();
  if (r.certificate) {
    const CertificateCheck check = check_certificate(*r.certificate);
    j["certificate"] = to_json(*r.certificate);
    j["certificate_check"] = to_json(check);
    ok = ok && check.measures_ok;
    if (opts.boundary == BoundaryMode::reduce) ok = ok && check.ok() && check.equality;
  }
  j["ok"] = ok;
  return j;
}

json cmd_verify(const Config& cfg) {
  json j = report("verify");
  if (!cfg.certificate.empty()) {
    const json file = read_json_file(cfg.certificate);
    const Certificate cert = certificate_from_json(file.contains("certificate") ? file.at("certificate") : file);
    const CertificateCheck check = check_certificate(cert);
    j["certificate_check"] = to_json(check);
    j["ok"] = check.ok();
    return j;
  }
  const Instance inst = load_instance(cfg);
  const std::string rel = cfg.relaxation.empty() ? default_relaxation(*inst.graph) : cfg.relaxation;
  const LinearSystem sys = relaxation_for(*inst.graph, rel);
  const PreconditionCheck pre = check_preconditions(sys, *inst.graph, inst.x);
  j["graph"] = inst.graph->to_json();
  j["relaxation"] = rel;
  j["x"] = to_json(inst.x);
  j["preconditions"] = to_json(pre);
  bool ok = pre.ok();
  if (inst.graph->n() <= EnvelopeOptions{}.max_n) {
    const ExactnessVerdict v = exactness_verdict(sys, *inst.graph, inst.x);
    j["exactness"] = to_json(v);
  }
  j["ok"] = ok;
  return j;
}

json cmd_five_wheel() {
  const FiveWheelReport r = five_wheel_counterexample();
  json j = report("five-wheel");
  j.update(to_json(r));
  return j;
}

json cmd_suite(const Config& cfg) {
  if (cfg.samples < 1) throw UsageError("--samples must be positive");
  const SuiteOptions opts{cfg.seed, cfg.samples, cfg.threads};
  std::vector<SuiteGroup> groups;
  if (cfg.family == "even-wheel") {
    const std::vector<int> ms = cfg.m.empty() ? std::vector<int>{4, 6, 8} : cfg.m;
    for (int m : ms) {
      if (m < 4 || m % 2 != 0) throw UsageError("even-wheel suite needs even m >= 4");
      groups.push_back(even_wheel_group(m, opts));
    }
  } else if (cfg.family == "split") {
    const std::vector<int> a = cfg.n1.empty() ? std::vector<int>{2, 3, 4, 5} : cfg.n1;
    const std::vector<int> b = cfg.n2.empty() ? std::vector<int>{1, 2, 3, 4} : cfg.n2;
    if (a.size() != b.size()) throw UsageError("--n1 and --n2 lists must have the same length");
    for (size_t k = 0; k < a.size(); ++k) {
      if (a[k] < 1 || b[k] < 0) throw UsageError("split suite needs n1 >= 1 and n2 >= 0");
      groups.push_back(split_group(a[k], b[k], opts));
    }
  } else if (cfg.family == "triangle") {
    groups.push_back(triangle_group(opts));
  } else if (cfg.family == "bipartite") {
    if (cfg.max_n < 2 || cfg.max_n > 16) throw UsageError("--max-n must lie in [2, 16]");
    groups.push_back(bipartite_group(cfg.max_n, cfg.points, opts));
  } else {
    throw UsageError("suite needs --family even-wheel, split, triangle or bipartite");
  }
  json j = report("suite");
  j["family"] = cfg.family;
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  json gs = json::array();
  bool ok = true;
  for (const auto& g : groups) {
    gs.push_back(to_json(g, cfg.verbose));
    ok = ok && g.ok();
  }
  j["groups"] = gs;
  j["ok"] = ok;
  return j;
}

void emit(const json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw UsageError("cannot write '" + out + "'");
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval certificates and exact LP bounds for graph-quadratic convex hulls"};
  app.require_subcommand(1);
  Config cfg;

  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out, "Write the JSON report here instead of stdout"); };
  auto add_point = [&](CLI::App* sub) {
    sub->add_option("--x", cfg.x, "Point as comma-separated decimals or p/q");
    sub->add_option("--instance", cfg.instance, "Graph JSON, optionally {\"graph\": ..., \"x\": [...]}");
    sub->add_option("--family", cfg.family, "wheel or split, sized by --m or --n1/--n2");
    sub->add_option("--m", cfg.m, "Rim size")->delimiter(',');
    sub->add_option("--n1", cfg.n1, "Clique side size")->delimiter(',');
    sub->add_option("--n2", cfg.n2, "Independent side size")->delimiter(',');
  };

  auto* lb_cmd = app.add_subcommand("lb", "Exact lower bound min y(E) over a relaxation at x");
  add_point(lb_cmd);
  lb_cmd->add_option("--relaxation", cfg.relaxation, "mccormick, mccormick-full, triangle or split");
  add_out(lb_cmd);

  auto* env_cmd = app.add_subcommand("envelope", "Convex envelope value at x by vertex LP");
  add_point(env_cmd);
  env_cmd->add_flag("--override-guard", cfg.override_guard, "Allow more than 16 vertices");
  add_out(env_cmd);

  auto* wheel_cmd = app.add_subcommand("wheel-cert", "Interval certificate for an even wheel");
  wheel_cmd->add_option("--x", cfg.x, "Rim values x_1..x_m then the hub")->required();
  add_out(wheel_cmd);

  auto* split_cmd = app.add_subcommand("split-cert", "Interval certificate for a complete split graph");
  split_cmd->add_option("--n1", cfg.n1, "Clique side size")->required();
  split_cmd->add_option("--n2", cfg.n2, "Independent side size")->required();
  split_cmd->add_option("--x", cfg.x, "Point, clique side first")->required();
  split_cmd->add_option("--boundary", cfg.boundary, "reduce (exact) or perturb");
  add_out(split_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate file, or preconditions and exactness at x");
  verify_cmd->add_option("--certificate", cfg.certificate, "Certificate JSON, or a wheel-cert/split-cert report holding one");
  add_point(verify_cmd);
  verify_cmd->add_option("--relaxation", cfg.relaxation, "mccormick, mccormick-full, triangle or split");
  add_out(verify_cmd);

  auto* five_cmd = app.add_subcommand("five-wheel", "Reproduce the two W_5 points missed by the triangle relaxation");
  add_out(five_cmd);

  auto* suite_cmd = app.add_subcommand("suite", "Seeded random property suite");
  suite_cmd->add_option("--family", cfg.family, "even-wheel, split, triangle or bipartite")->required();
  suite_cmd->add_option("--m", cfg.m, "Rim sizes, e.g. 4,6,8")->delimiter(',');
  suite_cmd->add_option("--n1", cfg.n1, "Clique sizes, paired with --n2")->delimiter(',');
  suite_cmd->add_option("--n2", cfg.n2, "Independent side sizes")->delimiter(',');
  suite_cmd->add_option("--samples", cfg.samples, "Samples per group");
  suite_cmd->add_option("--seed", cfg.seed, "Seed");
  suite_cmd->add_option("--threads", cfg.threads, "Worker threads, 0 for all cores");
  suite_cmd->add_option("--max-n", cfg.max_n, "Largest bipartite graph");
  suite_cmd->add_option("--points", cfg.points, "Points per bipartite graph");
  suite_cmd->add_flag("--verbose", cfg.verbose, "List passing samples too");
  add_out(suite_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    json j;
    if (*lb_cmd) j = cmd_lb(cfg);
    else if (*env_cmd) j = cmd_envelope(cfg);
    else if (*wheel_cmd) j = cmd_wheel(cfg);
    else if (*split_cmd) j = cmd_split(cfg);
    else if (*verify_cmd) j = cmd_verify(cfg);
    else if (*five_cmd) j = cmd_five_wheel();
    else j = cmd_suite(cfg);
    emit(j, cfg.out);
    return j.at("ok").get<bool>() ? kPass : kCheckFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hullcert: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "hullcert: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "hullcert: " << e.what() << "\n";
    return kCheckFailed;
  }
}
