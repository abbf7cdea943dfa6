#include "stanley/experiment.hpp"

#include <set>
#include <stdexcept>

#include "stanley/io.hpp"
#include "stanley/squarefree.hpp"

namespace stanley {

std::size_t draw_between(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  if (lo > hi) throw std::invalid_argument("draw_between: empty range");
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng, std::size_t n, std::size_t generators) {
  if (n == 0 || n > 20) throw std::invalid_argument("random_squarefree_ideal: n must lie in 1..20");
  const std::uint64_t subsets = (std::uint64_t{1} << n) - 1;
  std::vector<Monomial> gens;
  for (std::size_t g = 0; g < generators; ++g) {
    gens.push_back(Monomial::squarefree(n, VariableSet(1 + rng() % subsets)));
  }
  return MonomialIdeal(n, std::move(gens));
}

std::vector<CorpusIdeal> graph_corpus() {
  std::vector<CorpusIdeal> out;
  auto add = [&](std::string id, Graph g) { out.push_back({std::move(id), cover_ideal(g), std::move(g)}); };
  for (std::size_t n = 3; n <= 5; ++n) add("P" + std::to_string(n), Graph::path(n));
  for (std::size_t n = 3; n <= 6; ++n) add("C" + std::to_string(n), Graph::cycle(n));
  for (std::size_t n = 3; n <= 4; ++n) add("K" + std::to_string(n), Graph::complete(n));
  return out;
}

std::vector<CorpusIdeal> random_corpus(std::uint64_t seed, const RandomFamily& family) {
  if (family.min_generators == 0) throw std::invalid_argument("random family needs at least one generator");
  std::mt19937_64 rng(seed);
  std::vector<CorpusIdeal> out;
  for (std::size_t i = 0; i < family.count; ++i) {
    const std::size_t n = draw_between(rng, family.min_vars, family.max_vars);
    const std::size_t m = draw_between(rng, family.min_generators, family.max_generators);
    out.push_back({"R" + std::to_string(i + 1), random_squarefree_ideal(rng, n, m), std::nullopt});
  }
  return out;
}

std::vector<CorpusIdeal> default_corpus(std::uint64_t seed, const RandomFamily& family) {
  auto out = graph_corpus();
  for (auto& r : random_corpus(seed, family)) out.push_back(std::move(r));
  return out;
}

namespace {

using nlohmann::json;

void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ParseError(where + ": unknown field \"" + key + "\"");
  }
}

std::size_t size_field(const json& j, const char* key, std::size_t fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_unsigned()) throw ParseError(std::string("field ") + key + " must be a nonnegative integer");
  return j.at(key).get<std::size_t>();
}

RandomFamily random_family_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("\"random\" must be an object");
  check_keys(j, {"count", "min_vars", "max_vars", "min_generators", "max_generators"}, "random");
  RandomFamily f;
  f.count = size_field(j, "count", f.count);
  f.min_vars = size_field(j, "min_vars", f.min_vars);
  f.max_vars = size_field(j, "max_vars", f.max_vars);
  f.min_generators = size_field(j, "min_generators", f.min_generators);
  f.max_generators = size_field(j, "max_generators", f.max_generators);
  if (f.min_vars < 1 || f.min_vars > f.max_vars || f.max_vars > 20 || f.min_generators < 1 ||
      f.min_generators > f.max_generators) {
    throw ParseError("random: inconsistent variable or generator ranges");
  }
  return f;
}

CorpusIdeal corpus_entry_from_json(const json& j, std::size_t index, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ParseError("corpus entries must be objects");
  check_keys(j, {"id", "graph", "graph_file", "ideal", "ideal_file"}, "corpus entry");
  const std::string id = j.contains("id") ? j.at("id").get<std::string>() : "I" + std::to_string(index + 1);
  if (id.find_first_of(",\"\n") != std::string::npos) throw ParseError("corpus id must not contain , \" or newlines");
  auto resolve = [&](const char* key) { return (base_dir / j.at(key).get<std::string>()).string(); };
  if (j.contains("graph") || j.contains("graph_file")) {
    Graph g = j.contains("graph") ? graph_from_json(j.at("graph")) : parse_graph(read_file(resolve("graph_file")));
    return {id, cover_ideal(g), std::move(g)};
  }
  if (j.contains("ideal")) return {id, ideal_from_json(j.at("ideal")), std::nullopt};
  if (j.contains("ideal_file")) return {id, parse_ideal(read_file(resolve("ideal_file"))), std::nullopt};
  throw ParseError("corpus entry \"" + id + "\" needs a graph or an ideal");
}

PairShape mode_from_name(const std::string& name) {
  if (name == "ideal") return PairShape::Ideal;
  if (name == "quotient") return PairShape::Quotient;
  throw ParseError("mode must be \"ideal\" or \"quotient\"");
}

std::string power_name(std::size_t k) { return "(" + std::to_string(k) + ")"; }

std::string value_text(const std::optional<SdepthResult>& r) { return r ? std::to_string(r->value) : "REFUSED"; }

}  // namespace

ExperimentSpec experiment_spec_from_json(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ParseError("experiment spec must be a JSON object");
  check_keys(j, {"seed", "corpus", "random", "modes", "symbolic_pairs", "max_power", "limits", "transfers", "witness_dir"},
             "experiment spec");
  ExperimentSpec spec;
  try {
    if (j.contains("seed")) {
      if (!j.at("seed").is_number_unsigned()) throw ParseError("seed must be a nonnegative integer");
      spec.seed = j.at("seed").get<std::uint64_t>();
    }
    const RandomFamily family = j.contains("random") ? random_family_from_json(j.at("random")) : RandomFamily{};
    const json corpus = j.value("corpus", json("default"));
    if (corpus.is_string()) {
      if (corpus.get<std::string>() != "default") throw ParseError("corpus must be \"default\" or a list");
      spec.ideals = default_corpus(spec.seed, family);
    } else if (corpus.is_array()) {
      for (std::size_t i = 0; i < corpus.size(); ++i) spec.ideals.push_back(corpus_entry_from_json(corpus[i], i, base_dir));
      if (j.contains("random")) {
        for (auto& r : random_corpus(spec.seed, family)) spec.ideals.push_back(std::move(r));
      }
    } else {
      throw ParseError("corpus must be \"default\" or a list");
    }
    if (j.contains("modes")) {
      spec.modes.clear();
      for (const auto& m : j.at("modes")) spec.modes.push_back(mode_from_name(m.get<std::string>()));
    }
    if (j.contains("symbolic_pairs")) {
      spec.symbolic_pairs.clear();
      for (const auto& p : j.at("symbolic_pairs")) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned() ||
            p[0].get<std::size_t>() < 1 || p[1].get<std::size_t>() < 1) {
          throw ParseError("symbolic_pairs entries must be [k, s] with k, s >= 1");
        }
        spec.symbolic_pairs.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
      }
    }
    spec.max_power = size_field(j, "max_power", spec.max_power);
    if (j.contains("limits")) {
      const auto& l = j.at("limits");
      check_keys(l, {"max_poset_points", "time_budget_secs"}, "limits");
      spec.limits.max_poset_points = size_field(l, "max_poset_points", spec.limits.max_poset_points);
      if (l.contains("time_budget_secs")) {
        if (!l.at("time_budget_secs").is_number() || l.at("time_budget_secs").get<double>() <= 0) {
          throw ParseError("time_budget_secs must be positive");
        }
        spec.limits.time_budget_secs = l.at("time_budget_secs").get<double>();
      }
    }
    spec.run_transfers = j.value("transfers", true);
    if (j.contains("witness_dir")) spec.witness_dir = base_dir / j.at("witness_dir").get<std::string>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("experiment spec: ") + e.what());
  }
  return spec;
}

std::size_t ExperimentReport::count(const std::string& verdict) const {
  std::size_t c = 0;
  for (const auto& r : rows) c += r.verdict == verdict;
  return c;
}

std::string ExperimentReport::csv() const {
  std::string out = "ideal,mode,power,sdepth,theorem,verdict\n";
  for (const auto& r : rows) {
    out += r.ideal + "," + r.mode + "," + r.power + "," + r.sdepth + "," + r.theorem + "," + r.verdict + "\n";
  }
  return out;
}

std::string mode_name(PairShape shape) { return shape == PairShape::Ideal ? "ideal" : "quotient"; }

Experiment::Experiment(ExperimentSpec spec) : spec_(std::move(spec)) {
  std::set<std::string> ids;
  for (const auto& e : spec_.ideals) {
    if (!ids.insert(e.id).second) throw std::invalid_argument("duplicate corpus id " + e.id);
    if (!is_squarefree(e.ideal) || e.ideal.is_zero() || e.ideal.is_unit()) {
      throw std::invalid_argument("corpus ideal " + e.id + " must be squarefree, nonzero and proper");
    }
  }
  if (spec_.witness_dir) std::filesystem::create_directories(*spec_.witness_dir);
}

const MonomialIdeal& Experiment::symbolic(const CorpusIdeal& entry, std::size_t k) {
  const std::string key = entry.id + "^" + power_name(k);
  auto it = symbolic_.find(key);
  if (it == symbolic_.end()) it = symbolic_.emplace(key, symbolic_power(entry.ideal, k)).first;
  return it->second;
}

const std::optional<SdepthResult>& Experiment::sdepth(const CorpusIdeal& entry, PairShape mode, std::size_t k) {
  const auto key = std::make_tuple(entry.id, static_cast<int>(mode), k);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  std::optional<SdepthResult> result;
  try {
    result = sdepth_exact(shape_pair(mode, symbolic(entry, k)), spec_.limits);
  } catch (const SolverRefused&) {
  }
  if (result && spec_.witness_dir) {
    const auto file = *spec_.witness_dir / (entry.id + "_" + mode_name(mode) + "_" + std::to_string(k) + ".json");
    write_file(file.string(), format_decomposition_json(result->witness));
    witnesses_.push_back({{"ideal", entry.id}, {"mode", mode_name(mode)}, {"power", k}, {"file", file.string()}});
  }
  return cache_.emplace(key, std::move(result)).first->second;
}

void Experiment::add_row(const CorpusIdeal& entry, PairShape mode, std::string power, std::string sdepth,
                         std::string theorem, std::string verdict) {
  checks_.push_back({entry.id, mode_name(mode), std::move(power), std::move(sdepth), std::move(theorem), std::move(verdict)});
}

void Experiment::inequality(const CorpusIdeal& entry, PairShape mode, std::size_t high, std::size_t low,
                            const char* theorem) {
  const auto& a = sdepth(entry, mode, high);
  const auto& b = sdepth(entry, mode, low);
  std::string verdict = !a || !b ? "SKIPPED" : a->value <= b->value ? "PASS" : "FAIL";
  add_row(entry, mode, power_name(high) + "<=" + power_name(low), value_text(a) + "<=" + value_text(b), theorem,
          std::move(verdict));
}

void Experiment::transfer_row(const CorpusIdeal& entry, PairShape mode, std::size_t from, std::size_t to,
                              const TransferInstance& instance) {
  const std::string power = power_name(from) + "->" + power_name(to);
  const auto& src = sdepth(entry, mode, from);
  if (!src) {
    add_row(entry, mode, power, "REFUSED->?", "transfer-soundness", "SKIPPED");
    return;
  }
  const auto& dst = sdepth(entry, mode, to);
  try {
    const auto r = transfer(instance, src->witness);
    // The transferred decomposition can never beat the exact optimum.
    const bool optimal_ok = !dst || r.output_sdepth <= dst->value;
    const bool ok = r.verified && r.output_sdepth >= r.input_sdepth && optimal_ok;
    add_row(entry, mode, power, std::to_string(r.input_sdepth) + "->" + std::to_string(r.output_sdepth),
            "transfer-soundness", ok ? "PASS" : "FAIL");
  } catch (const std::exception&) {
    add_row(entry, mode, power, "error", "transfer-soundness", "FAIL");
  }
}

void Experiment::colon_step(const CorpusIdeal& entry, std::size_t k, std::size_t t, const Monomial& v,
                            const char* theorem) {
  const MonomialIdeal& high = symbolic(entry, k + t);
  const bool identity = colon(high, v) == symbolic(entry, k);
  checks_.push_back({entry.id, "-", power_name(k + t) + ":" + format_monomial(v) + "=" + power_name(k), "-",
                     "colon-identity", identity ? "PASS" : "FAIL"});
  for (PairShape mode : spec_.modes) {
    inequality(entry, mode, k + t, k, theorem);
    if (!spec_.run_transfers) continue;
    const QuotientPair source = shape_pair(mode, high);
    transfer_row(entry, mode, k + t, k, make_colon_instance(source.numerator(), source.denominator(), v));
  }
}

void Experiment::symbolic_inequality(const CorpusIdeal& entry) {
  for (PairShape mode : spec_.modes) {
    for (const auto& [k, s] : spec_.symbolic_pairs) {
      inequality(entry, mode, k * s, s, "symbolic-multiple");
      if (spec_.run_transfers) transfer_row(entry, mode, k * s, s, make_symbolic_instance(entry.ideal, s, k, mode));
    }
  }
}

void Experiment::unmixed_step(const CorpusIdeal& entry) {
  const auto info = height_unmixed(entry.ideal);
  if (!info.unmixed) throw std::invalid_argument("unmixed_step: ideal " + entry.id + " is not unmixed");
  const std::size_t d = info.height;
  const std::size_t n = entry.ideal.ring_size();
  const Monomial v = Monomial::squarefree(n, VariableSet::all(n));
  for (std::size_t k = 1; k + d <= spec_.max_power; ++k) colon_step(entry, k, d, v, "unmixed-height-step");

  for (PairShape mode : spec_.modes) {
    for (std::size_t l = 1; l <= d && l + d <= spec_.max_power; ++l) {
      std::string powers, values, verdict = "PASS";
      bool has_previous = false;
      std::size_t previous = 0;
      for (std::size_t p = l; p <= spec_.max_power; p += d) {
        const auto& r = sdepth(entry, mode, p);
        powers += (powers.empty() ? "" : ";") + power_name(p);
        values += (values.empty() ? "" : ";") + value_text(r);
        if (!r) {
          if (verdict == "PASS") verdict = "SKIPPED";
          has_previous = false;
          continue;
        }
        if (has_previous && r->value > previous) verdict = "FAIL";
        has_previous = true;
        previous = r->value;
      }
      add_row(entry, mode, powers, values, "monotone-prefix", verdict);
    }
  }
}

void Experiment::a_set_step(const CorpusIdeal& entry) {
  const auto a = a_set_for(entry.ideal);
  if (!a) return;
  const Monomial v = Monomial::squarefree(entry.ideal.ring_size(), *a);
  for (std::size_t k = 1; k + 1 <= spec_.max_power; ++k) colon_step(entry, k, 1, v, "a-set-step");
}

ExperimentReport Experiment::report() const {
  ExperimentReport out;
  for (const auto& e : spec_.ideals) {
    for (const auto& [key, r] : cache_) {
      const auto& [id, mode, k] = key;
      if (id != e.id) continue;
      out.rows.push_back({id, mode_name(static_cast<PairShape>(mode)), power_name(k), value_text(r), "-",
                          r ? "VALUE" : "REFUSED"});
    }
  }
  out.rows.insert(out.rows.end(), checks_.begin(), checks_.end());

  json corpus = json::array();
  for (const auto& e : spec_.ideals) {
    const auto info = height_unmixed(e.ideal);
    const auto a = a_set_for(e.ideal);
    json entry = {{"id", e.id}, {"ideal", ideal_to_json(e.ideal)}, {"height", info.height}, {"unmixed", info.unmixed}};
    if (e.graph) entry["graph"] = graph_to_json(*e.graph);
    if (a) {
      json idx = json::array();
      for (std::size_t i : a->indices()) idx.push_back(i + 1);
      entry["a_set"] = std::move(idx);
    } else {
      entry["a_set"] = nullptr;
    }
    corpus.push_back(std::move(entry));
  }
  json modes = json::array();
  for (PairShape m : spec_.modes) modes.push_back(mode_name(m));
  json pairs = json::array();
  for (const auto& [k, s] : spec_.symbolic_pairs) pairs.push_back({k, s});
  json counts = json::object();
  for (const char* v : {"VALUE", "REFUSED", "PASS", "FAIL", "SKIPPED"}) counts[v] = out.count(v);
  out.metadata = {{"tool", "stanley"},
                  {"version", "0.1.0"},
                  {"seed", spec_.seed},
                  {"limits",
                   {{"max_poset_points", spec_.limits.max_poset_points},
                    {"time_budget_secs", spec_.limits.time_budget_secs}}},
                  {"max_power", spec_.max_power},
                  {"modes", modes},
                  {"symbolic_pairs", pairs},
                  {"corpus", corpus},
                  {"witnesses", witnesses_},
                  {"counts", counts}};
  return out;
}

ExperimentReport run_symbolic_inequality(const ExperimentSpec& spec) {
  Experiment e(spec);
  for (const auto& entry : spec.ideals) e.symbolic_inequality(entry);
  return e.report();
}

ExperimentReport run_unmixed_step(const ExperimentSpec& spec) {
  Experiment e(spec);
  for (const auto& entry : spec.ideals) e.unmixed_step(entry);
  return e.report();
}

ExperimentReport run_experiment(const ExperimentSpec& spec) {
  Experiment e(spec);
  for (const auto& entry : spec.ideals) {
    e.symbolic_inequality(entry);
    if (height_unmixed(entry.ideal).unmixed) e.unmixed_step(entry);
    e.a_set_step(entry);
  }
  return e.report();
}

TransferDemo run_transfer_demo(const TransferInstance& instance, const StanleyDecomposition& decomposition) {
  TransferDemo demo{transfer(instance, decomposition), {}};
  demo.report = {{"input_sdepth", demo.result.input_sdepth},
                 {"output_sdepth", demo.result.output_sdepth},
                 {"verified", demo.result.verified},
                 {"phi", phi_to_json(instance.phi)},
                 {"box", monomial_to_json(demo.result.box)},
                 {"box_doublings", demo.result.box_doublings}};
  return demo;
}

}  // namespace stanley
