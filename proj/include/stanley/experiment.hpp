#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stanley/graph.hpp"
#include "stanley/solver.hpp"
#include "stanley/transfer.hpp"

namespace stanley {

struct CorpusIdeal {
  std::string id;
  MonomialIdeal ideal;
  std::optional<Graph> graph;  // set for cover ideals
};

struct RandomFamily {
  std::size_t count = 10;
  std::size_t min_vars = 3;
  std::size_t max_vars = 5;
  std::size_t min_generators = 2;
  std::size_t max_generators = 4;
};

// Portable draw in [lo, hi]; the standard distributions differ across
// library implementations, which would break corpus reproducibility.
std::size_t draw_between(std::mt19937_64& rng, std::size_t lo, std::size_t hi);

/// Squarefree ideal whose generators are random nonempty variable subsets.
MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng, std::size_t n, std::size_t generators);

std::vector<CorpusIdeal> graph_corpus();
std::vector<CorpusIdeal> random_corpus(std::uint64_t seed, const RandomFamily& family);
// Paths P3-P5, cycles C3-C6, complete graphs K3-K4 and the random family.
std::vector<CorpusIdeal> default_corpus(std::uint64_t seed, const RandomFamily& family = {});

struct ExperimentSpec {
  std::uint64_t seed = 1;
  std::vector<CorpusIdeal> ideals;
  std::vector<PairShape> modes{PairShape::Ideal, PairShape::Quotient};
  std::vector<std::pair<std::size_t, std::size_t>> symbolic_pairs{{2, 1}, {3, 1}};  // (k, s)
  std::size_t max_power = 4;  // largest symbolic power any step may need
  SolverLimits limits;
  bool run_transfers = true;
  std::optional<std::filesystem::path> witness_dir;
};

/// Reads a spec. Relative `graph_file` / `ideal_file` paths resolve against
/// `base_dir`. Missing fields keep their defaults; "corpus": "default"
/// selects default_corpus(seed, random).
ExperimentSpec experiment_spec_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});

struct ReportRow {
  std::string ideal;
  std::string mode;
  std::string power;
  std::string sdepth;
  std::string theorem;
  std::string verdict;  // VALUE, REFUSED, PASS, FAIL, SKIPPED
};

struct ExperimentReport {
  std::vector<ReportRow> rows;
  nlohmann::json metadata = nlohmann::json::object();

  std::size_t count(const std::string& verdict) const;
  bool has_failure() const { return count("FAIL") > 0; }
  // Header `ideal,mode,power,sdepth,theorem,verdict`, one line per row.
  std::string csv() const;
};

std::string mode_name(PairShape shape);

/// Runs the checks for one spec, memoizing every sdepth computation.
class Experiment {
 public:
  explicit Experiment(ExperimentSpec spec);

  // sdepth(I^(ks)) <= sdepth(I^(s)) for every configured (k, s), plus the
  // power-map transfer of the larger power's witness.
  void symbolic_inequality(const CorpusIdeal& entry);
  // For unmixed I of height d: the colon identity (I^(k+d) : x1...xn) = I^(k),
  // sdepth(I^(k+d)) <= sdepth(I^(k)), the colon transfer and the
  // nonincreasing prefixes of sdepth(I^(jd+l)). Throws for mixed ideals.
  void unmixed_step(const CorpusIdeal& entry);
  // When some variable set A meets every minimal prime once: the identity
  // (I^(k+1) : prod A) = I^(k) and sdepth(I^(k+1)) <= sdepth(I^(k)).
  void a_set_step(const CorpusIdeal& entry);

  // Value rows for everything computed so far, then the check rows.
  ExperimentReport report() const;

  // nullopt when the solver refused.
  const std::optional<SdepthResult>& sdepth(const CorpusIdeal& entry, PairShape mode, std::size_t k);

 private:
  void add_row(const CorpusIdeal& entry, PairShape mode, std::string power, std::string sdepth, std::string theorem,
               std::string verdict);
  void inequality(const CorpusIdeal& entry, PairShape mode, std::size_t high, std::size_t low, const char* theorem);
  void transfer_row(const CorpusIdeal& entry, PairShape mode, std::size_t from, std::size_t to,
                    const TransferInstance& instance);
  void colon_step(const CorpusIdeal& entry, std::size_t k, std::size_t t, const Monomial& v, const char* theorem);

  ExperimentSpec spec_;
  std::map<std::tuple<std::string, int, std::size_t>, std::optional<SdepthResult>> cache_;
  std::map<std::string, MonomialIdeal> symbolic_;  // "<id>^(k)"
  std::vector<ReportRow> checks_;
  nlohmann::json witnesses_ = nlohmann::json::array();

  const MonomialIdeal& symbolic(const CorpusIdeal& entry, std::size_t k);
};

ExperimentReport run_symbolic_inequality(const ExperimentSpec& spec);
ExperimentReport run_unmixed_step(const ExperimentSpec& spec);
// All checks: symbolic multiples, unmixed ideals' height steps and A-set steps.
ExperimentReport run_experiment(const ExperimentSpec& spec);

struct TransferDemo {
  TransferResult result;
  nlohmann::json report;  // {input_sdepth, output_sdepth, verified, phi, box_doublings}
};

TransferDemo run_transfer_demo(const TransferInstance& instance, const StanleyDecomposition& decomposition);

}  // namespace stanley
