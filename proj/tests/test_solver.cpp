#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "stanley/graph.hpp"
#include "stanley/solver.hpp"
#include "stanley/squarefree.hpp"

using namespace stanley;
using testing::ideal;

namespace {

MonomialIdeal maximal_ideal(std::size_t n) { return MonomialIdeal::prime(n, VariableSet::all(n)); }

oracle::Poset oracle_poset(const QuotientPair& q) {
  return oracle::poset(q.ring_size(), testing::to_gens(q.numerator()), testing::to_gens(q.denominator()));
}

// Random pair (I, J) with J inside I, I and J given by small exponents.
QuotientPair random_pair(std::mt19937_64& rng) {
  const std::size_t n = 1 + rng() % 3;
  const auto I = rng() % 4 == 0 ? MonomialIdeal::unit(n)
                                : testing::to_ideal(n, oracle::random_gens(rng, n, 1 + rng() % 3, 2));
  switch (rng() % 3) {
    case 0:
      return QuotientPair::of_ideal(I);
    case 1:
      return QuotientPair(I, product(I, testing::to_ideal(n, oracle::random_gens(rng, n, 1 + rng() % 2, 2))));
    default:
      return QuotientPair(I, intersect(I, testing::to_ideal(n, oracle::random_gens(rng, n, 1 + rng() % 3, 2))));
  }
}

void check_witness(const QuotientPair& q, const SdepthResult& r) {
  CHECK(r.witness.quotient == q);
  CHECK(verify_decomposition(r.witness));
  CHECK(sdepth_of(r.witness) == r.value);
}

}  // namespace

TEST_CASE("characteristic poset examples") {
  auto p = build_poset(QuotientPair::of_ring_quotient(maximal_ideal(2)));
  CHECK(p.bound == Monomial{1, 1});
  CHECK(p.points == std::vector<Monomial>{Monomial{0, 0}});

  p = build_poset(QuotientPair::of_ideal(ideal(1, {"x1"})));
  CHECK(p.bound == Monomial{1});
  CHECK(p.points == std::vector<Monomial>{Monomial{1}});

  p = build_poset(QuotientPair::of_ideal(ideal(3, {"x1*x2", "x1*x3", "x2*x3"})));
  CHECK(p.bound == Monomial{1, 1, 1});
  CHECK(p.points == std::vector<Monomial>{Monomial{0, 1, 1}, Monomial{1, 0, 1}, Monomial{1, 1, 0}, Monomial{1, 1, 1}});
  CHECK(p.free_count(Monomial{1, 0, 1}) == 2);

  CHECK(build_poset(QuotientPair(ideal(2, {"x1"}), ideal(2, {"x1"}))).empty());
}

TEST_CASE("exact values") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto whole = QuotientPair::of_ring_quotient(MonomialIdeal::zero(n));
    const auto r = sdepth_exact(whole);
    CHECK(r.value == n);
    check_witness(whole, r);
    const auto point = QuotientPair::of_ring_quotient(maximal_ideal(n));
    CHECK(sdepth_exact(point).value == 0);
  }
  CHECK(sdepth_exact(QuotientPair::of_ideal(maximal_ideal(3))).value == 2);
  CHECK(sdepth_exact(QuotientPair::of_ideal(ideal(2, {"x1*x2"}))).value == 2);
  CHECK(sdepth_exact(QuotientPair(ideal(2, {"x1"}), ideal(2, {"x1"}))).value == 0);
}

TEST_CASE("maximal ideals against the exhaustive enumerator") {
  // Frozen after the first exhaustive computation: ceil(n / 2).
  const std::size_t expected[] = {0, 1, 1, 2, 2};
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto q = QuotientPair::of_ideal(maximal_ideal(n));
    const auto r = sdepth_exact(q);
    CHECK(r.value == expected[n]);
    CHECK(static_cast<int>(r.value) == oracle::naive_sdepth(oracle_poset(q)));
    check_witness(q, r);
  }
}

TEST_CASE("decision examples") {
  const auto point = QuotientPair::of_ring_quotient(maximal_ideal(2));
  CHECK(sdepth_decision(point, 0));
  CHECK_FALSE(sdepth_decision(point, 1));
  const auto m3 = QuotientPair::of_ideal(maximal_ideal(3));
  CHECK(sdepth_decision(m3, 2));
  CHECK_FALSE(sdepth_decision(m3, 3));
  CHECK_THROWS_AS(sdepth_decision(m3, 4), std::invalid_argument);
  CHECK_FALSE(sdepth_decision(QuotientPair(ideal(2, {"x1"}), ideal(2, {"x1"})), 1));
}

TEST_CASE("partitions and their decompositions") {
  const auto q = QuotientPair::of_ideal(maximal_ideal(3));
  const auto poset = build_poset(q);
  const auto p = find_partition(poset, 2);
  REQUIRE(p);
  CHECK(p->value(poset) >= 2);
  std::size_t covered = 0;
  for (const auto& iv : p->intervals) {
    CHECK(divides(iv.bottom, iv.top));
    std::size_t volume = 1;
    for (std::size_t j = 0; j < 3; ++j) volume *= iv.top[j] - iv.bottom[j] + 1;
    covered += volume;
  }
  CHECK(covered == poset.points.size());
  CHECK(verify_decomposition(decomposition_from_partition(poset, *p)));
  CHECK_FALSE(find_partition(poset, 3));
  CHECK(IntervalPartition{}.value(poset) == 0);
}

TEST_CASE("limits are enforced as refusals") {
  const auto big = QuotientPair::of_ring_quotient(symbolic_power(cover_ideal(Graph::cycle(6)), 4));
  try {
    sdepth_exact(big);
    FAIL("expected a refusal");
  } catch (const SolverRefused& e) {
    CHECK(e.reason() == SolverRefused::Reason::PosetTooLarge);
  }
  SolverLimits tight;
  tight.max_poset_points = 3;
  CHECK_THROWS_AS(sdepth_decision(QuotientPair::of_ideal(maximal_ideal(3)), 1, tight), SolverRefused);

  SolverLimits instant;
  instant.time_budget_secs = 1e-9;
  const auto hard = QuotientPair::of_ring_quotient(symbolic_power(cover_ideal(Graph::cycle(6)), 3));
  try {
    find_partition(build_poset(hard), 3, instant);
    FAIL("expected a refusal");
  } catch (const SolverRefused& e) {
    CHECK(e.reason() == SolverRefused::Reason::TimeBudget);
  }
}

TEST_CASE("hilbert function against direct counting") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 80; ++trial) {
    const auto q = random_pair(rng);
    const std::size_t n = q.ring_size();
    const std::size_t top = 6;
    const auto h = hilbert_function(build_poset(q), top);
    REQUIRE(h);
    std::vector<std::int64_t> count(top + 1, 0);
    oracle::box(oracle::Vec(n, static_cast<unsigned>(top)), [&](const oracle::Vec& u) {
      std::size_t deg = 0;
      for (unsigned e : u) deg += e;
      if (deg <= top && q.contains(testing::to_monomial(u))) ++count[deg];
    });
    CHECK(*h == count);
  }
}

TEST_CASE("property: solver agrees with the exhaustive enumerator") {
  std::mt19937_64 rng(7);
  std::size_t compared = 0;
  for (int trial = 0; trial < 400 && compared < 120; ++trial) {
    const auto q = random_pair(rng);
    const auto op = oracle_poset(q);
    if (op.points.size() > 12) continue;
    ++compared;
    const auto r = sdepth_exact(q);
    CHECK(static_cast<int>(r.value) == oracle::naive_sdepth(op));
    check_witness(q, r);
    const auto poset = build_poset(q);
    CHECK(poset.points.size() == op.points.size());
    bool previous = true;
    for (std::size_t d = 0; d <= q.ring_size(); ++d) {
      const bool now = sdepth_decision(q, d);
      // Decisions are monotone and the Hilbert bound never refutes a true d.
      if (now) CHECK(previous);
      if (now) CHECK(hilbert_series_admits(poset, d));
      CHECK(now == (d <= r.value));
      previous = now;
    }
    CHECK(r.value <= sdepth_upper_bound(poset));
  }
  CHECK(compared >= 100);
}

TEST_CASE("cover ideal powers produce verified witnesses") {
  for (const Graph& g : {Graph::path(4), Graph::cycle(4), Graph::cycle(5), Graph::complete(4)}) {
    const auto J = cover_ideal(g);
    for (std::size_t k = 1; k <= 3; ++k) {
      for (bool quotient : {false, true}) {
        const auto sym = symbolic_power(J, k);
        const auto q = quotient ? QuotientPair::of_ring_quotient(sym) : QuotientPair::of_ideal(sym);
        check_witness(q, sdepth_exact(q));
      }
    }
  }
}
