#include "hullcert/suite.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "hullcert/certificate.hpp"
#include "hullcert/envelope.hpp"
#include "hullcert/linear_system.hpp"
#include "hullcert/lp.hpp"
#include "hullcert/sampling.hpp"
#include "hullcert/split.hpp"
#include "hullcert/verifier.hpp"
#include "hullcert/wheel.hpp"

namespace hullcert {

std::size_t SuiteGroup::passed() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const SampleRecord& r) { return r.ok; }));
}

std::vector<SampleRecord> run_samples(std::size_t count, unsigned threads,
                                      const std::function<SampleRecord(std::size_t)>& fn) {
  std::vector<SampleRecord> out(count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = fn(i);
      } catch (const std::exception& e) {
        out[i] = {i, false, {{"error", e.what()}}};
      }
      out[i].index = i;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

namespace {

// Certificate check plus envelope; fills the shared report fields.
bool cross_check(const Certificate& cert, nlohmann::json& d) {
  const CertificateCheck check = check_certificate(cert);
  const Rational env = envelope_value(cert.graph, cert.x);
  d["edge_sum"] = check.edge_sum.str();
  d["lb"] = check.lb.str();
  d["envelope"] = env.str();
  d["tight_families"] = check.tight_families;
  return check.ok() && check.equality && check.claim_matches && env == check.edge_sum;
}

}  // namespace

SuiteGroup even_wheel_group(int m, const SuiteOptions& options) {
  SuiteGroup g{"W_" + std::to_string(m), {}};
  const std::string stream = g.name;
  g.records = run_samples(static_cast<std::size_t>(options.samples), options.threads, [&](std::size_t i) {
    Sampler s = Sampler::for_sample(options.seed, stream, i);
    const auto x = s.point(m + 1);
    const WheelResult r = wheel_certificate(x, {.post_verify = false});
    nlohmann::json d{{"x", to_json(x)},
                     {"Tstar", r.selection.T},
                     {"phi_star", r.phi_star.str()},
                     {"negative_cycle", r.cycle.negative},
                     {"z_feasible", r.z_feasible}};
    bool ok = r.ok();
    if (r.certificate) {
      ok = cross_check(*r.certificate, d) && ok;
    }
    return SampleRecord{i, ok, d};
  });
  return g;
}

SuiteGroup split_group(int n1, int n2, const SuiteOptions& options, std::uint64_t boundary_num,
                       std::uint64_t boundary_den) {
  SuiteGroup g{"split(" + std::to_string(n1) + "," + std::to_string(n2) + ")", {}};
  const std::string stream = g.name;
  g.records = run_samples(static_cast<std::size_t>(options.samples), options.threads, [&](std::size_t i) {
    Sampler s = Sampler::for_sample(options.seed, stream, i);
    const auto x = s.point_with_boundary(n1 + n2, boundary_num, boundary_den);
    const SplitResult r = split_certificate(n1, n2, x, {.boundary = BoundaryMode::reduce, .post_verify = false});
    nlohmann::json S = r.S;
    nlohmann::json d{{"x", to_json(x)}, {"S", S}, {"alpha", r.checks.alpha}, {"case", r.derivation.case_tag}};
    bool ok = r.ok();
    if (r.certificate) ok = cross_check(*r.certificate, d) && ok;
    return SampleRecord{i, ok, d};
  });
  return g;
}

SuiteGroup triangle_group(const SuiteOptions& options) {
  SuiteGroup g{"K_3", {}};
  const Graph k3 = Graph::generic(3, {{1, 2}, {1, 3}, {2, 3}});
  const LinearSystem sys = triangle_relaxation(k3);
  g.records = run_samples(static_cast<std::size_t>(options.samples), options.threads, [&](std::size_t i) {
    Sampler s = Sampler::for_sample(options.seed, g.name, i);
    const auto x = s.point(3);
    const ExactnessVerdict v = exactness_verdict(sys, k3, x);
    nlohmann::json d = to_json(v);
    d["x"] = to_json(x);
    return SampleRecord{i, v.exact, d};
  });
  return g;
}

SuiteGroup bipartite_group(int max_n, int points_per_graph, const SuiteOptions& options) {
  SuiteGroup g{"bipartite(n<=" + std::to_string(max_n) + ")", {}};
  g.records = run_samples(static_cast<std::size_t>(options.samples), options.threads, [&](std::size_t i) {
    Sampler s = Sampler::for_sample(options.seed, g.name, i);
    const int n = static_cast<int>(s.between(2, max_n));
    const Graph graph = random_bipartite(s, n);
    const LinearSystem sys = mccormick(graph, false);
    nlohmann::json gaps = nlohmann::json::array();
    for (int k = 0; k < points_per_graph; ++k) {
      const auto x = s.point(n);
      const ExactnessVerdict v = exactness_verdict(sys, graph, x);
      if (!v.exact) {
        nlohmann::json e = to_json(v);
        e["x"] = to_json(x);
        gaps.push_back(e);
      }
    }
    nlohmann::json d{{"graph", graph.to_json()}, {"points", points_per_graph}, {"gaps", gaps}};
    return SampleRecord{i, gaps.empty(), d};
  });
  return g;
}

nlohmann::json to_json(const SuiteGroup& g, bool verbose) {
  nlohmann::json failures = nlohmann::json::array();
  nlohmann::json all = nlohmann::json::array();
  for (const auto& r : g.records) {
    nlohmann::json e = r.detail;
    e["index"] = r.index;
    e["ok"] = r.ok;
    if (!r.ok) failures.push_back(e);
    if (verbose) all.push_back(std::move(e));
  }
  nlohmann::json j{{"name", g.name},
                   {"samples", g.records.size()},
                   {"passed", g.passed()},
                   {"failures", failures},
                   {"ok", g.ok()}};
  if (verbose) j["records"] = all;
  if (g.ok()) j["verdict"] = "no counterexample found over " + std::to_string(g.records.size()) + " samples";
  return j;
}

}  // namespace hullcert
