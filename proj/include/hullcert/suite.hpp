#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hullcert {

struct SampleRecord {
  std::size_t index = 0;
  bool ok = false;
  nlohmann::json detail;
};

struct SuiteGroup {
  std::string name;
  std::vector<SampleRecord> records;

  std::size_t passed() const;
  bool ok() const { return passed() == records.size(); }
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  int samples = 200;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Runs fn(0..count-1) on worker threads; results come back in index order.
/// An exception inside fn becomes a failed record carrying the message.
std::vector<SampleRecord> run_samples(std::size_t count, unsigned threads,
                                      const std::function<SampleRecord(std::size_t)>& fn);

/// Wheel certificates on W_m at random rational x, checked against the LP bound and the envelope.
SuiteGroup even_wheel_group(int m, const SuiteOptions& options);
/// Split certificates on the complete split graph; each coordinate is 0 or 1 with
/// probability boundary_num/boundary_den.
SuiteGroup split_group(int n1, int n2, const SuiteOptions& options, std::uint64_t boundary_num = 1,
                       std::uint64_t boundary_den = 10);
/// lb(T(K_3)) against the envelope at random x.
SuiteGroup triangle_group(const SuiteOptions& options);
/// options.samples random bipartite graphs on 2..max_n vertices, points_per_graph x each, McCormick exactness.
SuiteGroup bipartite_group(int max_n, int points_per_graph, const SuiteOptions& options);

/// Failing records are always listed; passing ones only when verbose.
nlohmann::json to_json(const SuiteGroup& g, bool verbose);

}  // namespace hullcert
