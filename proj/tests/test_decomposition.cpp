#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "stanley/decomposition.hpp"
#include "stanley/solver.hpp"

using namespace stanley;
using testing::ideal;
using testing::mono;

namespace {

StanleySpace space(std::size_t n, const char* root, VariableSet vars) { return {mono(n, root), vars}; }

// Independent validity check on [0, bound + margin]: every monomial of I \ J
// in exactly one space, none outside.
bool brute_valid(const StanleyDecomposition& d, unsigned margin) {
  const std::size_t n = d.quotient.ring_size();
  oracle::Vec bound(n, 0);
  auto grow = [&](const Monomial& m) {
    for (std::size_t i = 0; i < n; ++i) bound[i] = std::max<unsigned>(bound[i], m[i]);
  };
  for (const auto& g : d.quotient.numerator().generators()) grow(g);
  for (const auto& g : d.quotient.denominator().generators()) grow(g);
  for (const auto& s : d.spaces) grow(s.root);
  for (auto& b : bound) b += 1 + margin;
  const auto gi = testing::to_gens(d.quotient.numerator()), gj = testing::to_gens(d.quotient.denominator());
  bool ok = true;
  oracle::box(bound, [&](const oracle::Vec& u) {
    int hits = 0;
    for (const auto& s : d.spaces) {
      bool in = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (u[i] < s.root[i] || (u[i] > s.root[i] && !s.vars.contains(i))) in = false;
      }
      hits += in;
    }
    const bool member = oracle::member(gi, u) && !oracle::member(gj, u);
    if (hits != (member ? 1 : 0)) ok = false;
  });
  return ok;
}

}  // namespace

TEST_CASE("space membership") {
  CHECK(space_contains(space(2, "x1", {0, 1}), mono(2, "x1^2*x2")));
  CHECK_FALSE(space_contains(space(2, "x1", {1}), mono(2, "x1^2")));
  CHECK(space_contains(space(2, "1", {}), mono(2, "1")));
  CHECK_FALSE(space_contains(space(2, "1", {}), mono(2, "x1")));
  CHECK_FALSE(space_contains(space(2, "x1*x2", {0, 1}), mono(2, "x1")));
  CHECK_THROWS_AS(space_contains(space(2, "x1", {0}), Monomial{1}), RingMismatch);
}

TEST_CASE("quotient pairs") {
  CHECK_THROWS(QuotientPair(ideal(2, {"x1"}), ideal(2, {"x2"})));
  CHECK_NOTHROW(QuotientPair(ideal(2, {"x1"}), ideal(2, {"x1*x2"})));
  CHECK_THROWS_AS(QuotientPair(ideal(2, {"x1"}), MonomialIdeal::zero(3)), RingMismatch);
  const auto q = QuotientPair::of_ring_quotient(ideal(2, {"x1^2", "x2"}));
  CHECK(q.contains(mono(2, "x1")));
  CHECK_FALSE(q.contains(mono(2, "x2")));
  CHECK(q.generator_bound() == Monomial{2, 1});
  CHECK(QuotientPair(ideal(2, {"x1"}), ideal(2, {"x1"})).is_zero_module());
}

TEST_CASE("verification examples") {
  const auto i1 = QuotientPair::of_ideal(ideal(2, {"x1"}));
  CHECK(verify_decomposition({i1, {space(2, "x1", {0, 1})}}));
  CHECK(verify_decomposition({QuotientPair::of_ring_quotient(ideal(2, {"x1"})), {space(2, "1", {1})}}));
  const StanleyDecomposition two{i1, {space(2, "x1", {0}), space(2, "x1*x2", {0, 1})}};
  CHECK(verify_decomposition(two));
  CHECK(sdepth_of(two) == 1);
}

TEST_CASE("verification failures carry the first witness") {
  const auto i1 = QuotientPair::of_ideal(ideal(2, {"x1"}));
  auto v = verify_decomposition({i1, {space(2, "x1", {0})}});
  CHECK_FALSE(v);
  REQUIRE(v.witness);
  CHECK(*v.witness == mono(2, "x1*x2"));

  v = verify_decomposition({i1, {space(2, "x1", {0, 1}), space(2, "x1^2", {0})}});
  CHECK_FALSE(v);
  CHECK(*v.witness == mono(2, "x1^2"));

  v = verify_decomposition({i1, {space(2, "x1", {0, 1}), space(2, "x2", {})}});
  CHECK_FALSE(v);
  CHECK(*v.witness == mono(2, "x2"));

  // Lists, not sets: a repeated space overlaps itself.
  v = verify_decomposition({i1, {space(2, "x1", {0, 1}), space(2, "x1", {0, 1})}});
  CHECK_FALSE(v);
  CHECK(*v.witness == mono(2, "x1"));

  CHECK_THROWS_AS(sdepth_of({i1, {space(2, "x1", {0})}}), InvalidDecomposition);
  CHECK_THROWS_AS(verify_decomposition({i1, {space(2, "x1", {0}), {Monomial{1}, {}}}}), RingMismatch);
}

TEST_CASE("sdepth of decompositions") {
  CHECK(sdepth_of({QuotientPair::of_ideal(ideal(2, {"x1"})), {space(2, "x1", {0, 1})}}) == 2);
  CHECK(sdepth_of({QuotientPair::of_ring_quotient(ideal(2, {"x1*x2"})),
                   {space(2, "1", {1}), space(2, "x1", {0})}}) == 1);
  CHECK(sdepth_of({QuotientPair::of_ring_quotient(MonomialIdeal::unit(3)), {}}) == 0);
  CHECK(min_dimension({}) == 0);
}

TEST_CASE("property: box verification agrees with a larger brute-force box") {
  std::mt19937_64 rng(606);
  std::size_t valid = 0, invalid = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const auto I = testing::to_ideal(n, oracle::random_gens(rng, n, 1 + rng() % 3, 2));
    const auto J = product(I, testing::to_ideal(n, oracle::random_gens(rng, n, 1 + rng() % 2, 2)));
    const QuotientPair q(I, rng() % 2 ? J : MonomialIdeal::zero(n));
    StanleyDecomposition d = sdepth_exact(q).witness;
    switch (rng() % 4) {
      case 0:
        break;
      case 1:
        if (!d.spaces.empty()) d.spaces.erase(d.spaces.begin() + static_cast<std::ptrdiff_t>(rng() % d.spaces.size()));
        break;
      case 2:
        if (!d.spaces.empty()) {
          auto& s = d.spaces[rng() % d.spaces.size()];
          const std::size_t i = rng() % n;
          s.vars.contains(i) ? s.vars.erase(i) : s.vars.insert(i);
        }
        break;
      default:
        if (!d.spaces.empty()) ++d.spaces[rng() % d.spaces.size()].root[rng() % n];
        break;
    }
    const bool ok = static_cast<bool>(verify_decomposition(d));
    CHECK(ok == brute_valid(d, 2));
    CHECK(ok == static_cast<bool>(verify_decomposition(d, 2)));
    (ok ? valid : invalid) += 1;
    if (ok) {
      // Emitted spaces are pairwise disjoint: no overlap candidate lcm(r1, r2)
      // lies in both spaces.
      for (std::size_t a = 0; a < d.spaces.size(); ++a) {
        for (std::size_t b = a + 1; b < d.spaces.size(); ++b) {
          const Monomial w = lcm(d.spaces[a].root, d.spaces[b].root);
          CHECK_FALSE((space_contains(d.spaces[a], w) && space_contains(d.spaces[b], w)));
        }
      }
    }
  }
  CHECK(valid > 50);
  CHECK(invalid > 50);
}

TEST_CASE("property: spaces are closed under multiplication by their variables") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const StanleySpace sp{testing::to_monomial(oracle::random_gens(rng, n, 1, 2)[0]),
                          VariableSet(rng() % (std::uint64_t{1} << n))};
    const Monomial v = sp.root * testing::to_monomial(oracle::random_gens(rng, n, 1, 1)[0]);
    if (!space_contains(sp, v)) continue;
    Monomial w = Monomial::one(n);
    for (std::size_t i : sp.vars.indices()) w[i] = static_cast<Exponent>(rng() % 3);
    CHECK(space_contains(sp, v * w));
  }
}

TEST_CASE("decomposition JSON") {
  const std::vector<StanleySpace> spaces{space(2, "x1", {0, 1}), space(2, "1", {})};
  CHECK(spaces_to_json(spaces).dump() == R"({"spaces":[{"root":[1,0],"vars":[1,2]},{"root":[0,0],"vars":[]}]})");
  CHECK(spaces_from_json(spaces_to_json(spaces), 2) == spaces);
  CHECK_THROWS_AS(spaces_from_json(nlohmann::json::parse(R"({"spaces":[{"root":[1],"vars":[]}]})"), 2), ParseError);
  CHECK_THROWS_AS(spaces_from_json(nlohmann::json::parse(R"({"spaces":[{"root":[1,0],"vars":[3]}]})"), 2), ParseError);
  CHECK_THROWS_AS(spaces_from_json(nlohmann::json::parse(R"({"space":[]})"), 2), ParseError);
  CHECK(format_space(space(3, "x1*x3^2", {0, 2})) == "x1*x3^2*K[x1,x3]");
}
