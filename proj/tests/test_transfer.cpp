#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "stanley/graph.hpp"
#include "stanley/solver.hpp"
#include "stanley/squarefree.hpp"
#include "stanley/transfer.hpp"

using namespace stanley;
using testing::ideal;
using testing::mono;

namespace {

const MonomialIdeal kTriangle = ideal(3, {"x1*x2", "x1*x3", "x2*x3"});

StanleyDecomposition single(const QuotientPair& q, const char* root, VariableSet vars) {
  return {q, {StanleySpace{mono(q.ring_size(), root), vars}}};
}

void check_sound(const TransferInstance& instance, const StanleyDecomposition& d) {
  const auto r = transfer(instance, d);
  CHECK(r.verified);
  CHECK(r.output.quotient == instance.target);
  CHECK(verify_decomposition(r.output));
  CHECK(r.input_sdepth == sdepth_of(d));
  CHECK(r.output_sdepth == sdepth_of(r.output));
  // The zero module has the empty decomposition and no meaningful sdepth.
  if (!instance.target.is_zero_module()) CHECK(r.output_sdepth >= r.input_sdepth);
}

}  // namespace

TEST_CASE("catalog maps") {
  const Monomial u{1, 0, 2};
  CHECK(PhiMap::identity()(u) == u);
  CHECK(PhiMap::power(3)(u) == Monomial{3, 0, 6});
  CHECK(PhiMap::multiply(Monomial{0, 1, 1})(u) == Monomial{1, 1, 3});
  CHECK(PhiMap::power(2).pull_back_bound(Monomial{3, 4, 0}) == Monomial{2, 2, 0});
  CHECK(PhiMap::multiply(Monomial{1, 5, 0}).pull_back_bound(Monomial{3, 4, 0}) == Monomial{2, 0, 0});
  CHECK(PhiMap::power(2).describe() == "power(2)");
  CHECK(PhiMap::multiply(Monomial{1, 0, 2}).describe() == "multiply(x1*x3^2)");
  CHECK_THROWS(PhiMap::power(0));
  CHECK_THROWS_AS(PhiMap::multiply(Monomial{1})(u), RingMismatch);
}

TEST_CASE("property: catalog maps preserve Stanley space membership") {
  std::mt19937_64 rng(123);
  std::vector<PhiMap> maps{PhiMap::identity(), PhiMap::power(2), PhiMap::power(3)};
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const Monomial u = testing::to_monomial(oracle::random_gens(rng, n, 1, 3)[0]);
    const Monomial v = testing::to_monomial(oracle::random_gens(rng, n, 1, 4)[0]);
    const VariableSet z(rng() % (std::uint64_t{1} << n));
    const PhiMap phi = trial % 4 == 3 ? PhiMap::multiply(testing::to_monomial(oracle::random_gens(rng, n, 1, 3)[0]))
                                      : maps[static_cast<std::size_t>(trial % 3)];
    CHECK(space_contains({u, z}, v) == space_contains({phi(u), z}, phi(v)));
  }
}

TEST_CASE("symbolic instances") {
  auto inst = make_symbolic_instance(ideal(2, {"x1*x2"}), 1, 2, PairShape::Ideal);
  CHECK(inst.source == QuotientPair::of_ideal(ideal(2, {"x1^2*x2^2"})));
  CHECK(inst.target == QuotientPair::of_ideal(ideal(2, {"x1*x2"})));
  CHECK(inst.phi.kind() == PhiMap::Kind::Power);

  inst = make_symbolic_instance(kTriangle, 1, 2, PairShape::Quotient);
  CHECK(inst.source == QuotientPair::of_ring_quotient(symbolic_power(kTriangle, 2)));
  CHECK(inst.target == QuotientPair::of_ring_quotient(kTriangle));

  inst = make_symbolic_instance(kTriangle, 1, 1, PairShape::Ideal);
  CHECK(inst.source == inst.target);
  CHECK(check_conditions(make_symbolic_instance(kTriangle, 2, 3, PairShape::Quotient)));
  CHECK_THROWS(make_symbolic_instance(ideal(1, {"x1^2"}), 1, 2, PairShape::Ideal));
  CHECK_THROWS(make_symbolic_instance(kTriangle, 0, 2, PairShape::Ideal));
}

TEST_CASE("colon instances") {
  auto inst = make_colon_instance(ideal(1, {"x1^2"}), MonomialIdeal::zero(1), mono(1, "x1"));
  CHECK(inst.target == QuotientPair::of_ideal(ideal(1, {"x1"})));

  inst = make_colon_instance(symbolic_power(kTriangle, 3), MonomialIdeal::zero(3), mono(3, "x1*x2*x3"));
  CHECK(inst.target == QuotientPair::of_ideal(symbolic_power(kTriangle, 1)));
  CHECK(check_conditions(inst));

  inst = make_colon_instance(kTriangle, MonomialIdeal::zero(3), Monomial::one(3));
  CHECK(inst.source == inst.target);
  CHECK_THROWS(make_colon_instance(ideal(2, {"x1"}), ideal(2, {"x2"}), mono(2, "x1")));
}

TEST_CASE("radical instances") {
  auto inst = make_radical_instance(ideal(1, {"x1^2"}), MonomialIdeal::zero(1));
  CHECK(inst.phi.exponent() == 2);
  CHECK(inst.target == QuotientPair::of_ideal(ideal(1, {"x1"})));

  inst = make_radical_instance(kTriangle, ideal(3, {"x1*x2*x3"}));
  CHECK(inst.phi.exponent() == 1);
  CHECK(inst.source == inst.target);

  const auto I = ideal(2, {"x1^2", "x2^3"});
  const auto J = ideal(2, {"x1^2*x2^3"});
  inst = make_radical_instance(I, J);
  CHECK(radical_power_exponent(J) == 3);
  CHECK(inst.phi.exponent() == 6);
  CHECK(inst.target == QuotientPair(ideal(2, {"x1", "x2"}), ideal(2, {"x1*x2"})));
  CHECK(check_conditions(inst));
  CHECK_THROWS(make_radical_instance(MonomialIdeal::zero(2), MonomialIdeal::zero(2)));
}

TEST_CASE("malformed instances are caught") {
  // (x1) against (x1^2) under the identity: x1 is in one numerator only.
  const TransferInstance bad{QuotientPair::of_ideal(ideal(2, {"x1^2"})), QuotientPair::of_ideal(ideal(2, {"x1"})),
                             PhiMap::identity()};
  const auto c = check_conditions(bad);
  CHECK_FALSE(c);
  REQUIRE(c.witness);
  CHECK(*c.witness == mono(2, "x1"));
  const auto d = single(bad.source, "x1^2", {0, 1});
  CHECK_THROWS_AS(transfer(bad, d), TransferError);
}

TEST_CASE("transfer examples") {
  const auto colon_inst = make_colon_instance(ideal(2, {"x1^2"}), MonomialIdeal::zero(2), mono(2, "x1"));
  auto r = transfer(colon_inst, single(colon_inst.source, "x1^2", {0, 1}));
  CHECK(r.output.spaces == std::vector<StanleySpace>{{mono(2, "x1"), {0, 1}}});
  CHECK(r.output_sdepth == 2);
  CHECK(r.box_doublings == 0);

  const auto sym = make_symbolic_instance(ideal(2, {"x1*x2"}), 1, 2, PairShape::Ideal);
  r = transfer(sym, single(sym.source, "x1^2*x2^2", {0, 1}));
  CHECK(r.output.spaces == std::vector<StanleySpace>{{mono(2, "x1*x2"), {0, 1}}});

  const auto id = make_identity_instance(QuotientPair::of_ring_quotient(kTriangle));
  const auto witness = sdepth_exact(id.source).witness;
  r = transfer(id, witness);
  CHECK(r.output.spaces == witness.spaces);
  CHECK(r.output_sdepth == r.input_sdepth);
}

TEST_CASE("transfer rejects bad inputs") {
  const auto inst = make_colon_instance(ideal(2, {"x1^2"}), MonomialIdeal::zero(2), mono(2, "x1"));
  CHECK_THROWS_AS(transfer(inst, single(inst.target, "x1", {0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(transfer(inst, single(inst.source, "x1^2", {0})), InvalidDecomposition);
}

TEST_CASE("property: transfers are sound and never beat the exact value") {
  std::mt19937_64 rng(2024);
  std::size_t runs = 0, nonzero = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 2 + rng() % 2;
    const auto I = testing::to_ideal(n, oracle::random_gens(rng, n, 1 + rng() % 3, 2));
    const auto J = product(I, testing::to_ideal(n, oracle::random_gens(rng, n, 1, 2)));
    const Monomial v = testing::to_monomial(oracle::random_gens(rng, n, 1, 2)[0]);
    std::vector<TransferInstance> instances{make_colon_instance(I, J, v), make_radical_instance(I, J),
                                            make_identity_instance(QuotientPair(I, J))};
    const auto sq = radical(I);
    if (!sq.is_unit()) {
      instances.push_back(make_symbolic_instance(sq, 1, 2, rng() % 2 ? PairShape::Ideal : PairShape::Quotient));
    }
    for (const auto& inst : instances) {
      REQUIRE(check_conditions(inst));
      const auto source = sdepth_exact(inst.source);
      check_sound(inst, source.witness);
      ++runs;
      if (inst.target.is_zero_module()) continue;
      ++nonzero;
      const auto r = transfer(inst, source.witness);
      const auto exact = sdepth_exact(inst.target).value;
      CHECK(r.output_sdepth <= exact);
      CHECK(exact >= source.value);
    }
  }
  CHECK(runs >= 400);
  CHECK(nonzero >= 300);
}

TEST_CASE("transfer of cover ideal witnesses") {
  const auto J = cover_ideal(Graph::cycle(5));
  const Monomial all = Monomial::squarefree(5, VariableSet::all(5));
  for (PairShape shape : {PairShape::Ideal, PairShape::Quotient}) {
    const auto inst = make_symbolic_instance(J, 1, 2, shape);
    check_sound(inst, sdepth_exact(inst.source).witness);
    const auto high = shape_pair(shape, symbolic_power(J, 3));
    const auto colon_inst = make_colon_instance(high.numerator(), high.denominator(), all);
    CHECK(colon_inst.target == shape_pair(shape, J));
    check_sound(colon_inst, sdepth_exact(high).witness);
  }
}

TEST_CASE("instance JSON") {
  using nlohmann::json;
  auto inst = instance_from_json(json::parse(R"({"kind":"colon","I":{"n":2,"generators":[[2,0]]},"v":[1,0]})"));
  CHECK(inst.target == QuotientPair::of_ideal(ideal(2, {"x1"})));
  CHECK(inst.phi.kind() == PhiMap::Kind::Multiply);

  inst = instance_from_json(
      json::parse(R"({"kind":"symbolic","I":{"n":3,"generators":[[1,1,0],[1,0,1],[0,1,1]]},"s":1,"k":2,"mode":"quotient"})"));
  CHECK(inst.source == QuotientPair::of_ring_quotient(symbolic_power(kTriangle, 2)));

  inst = instance_from_json(json::parse(R"({"kind":"radical","I":{"n":1,"generators":[[3]]}})"));
  CHECK(inst.phi.exponent() == 3);

  const auto round = instance_from_json(instance_to_json(inst));
  CHECK(round.source == inst.source);
  CHECK(round.target == inst.target);
  CHECK(round.phi.exponent() == inst.phi.exponent());
  CHECK(instance_to_json(round) == instance_to_json(inst));

  CHECK_THROWS_AS(instance_from_json(json::parse(R"({"kind":"warp"})")), ParseError);
  CHECK_THROWS_AS(instance_from_json(json::parse(R"({"kind":"colon","I":{"n":2,"generators":[[1,0]]}})")), ParseError);
  CHECK_THROWS_AS(instance_from_json(json::parse(
                      R"({"kind":"symbolic","I":{"n":1,"generators":[[1]]},"s":1,"k":2,"mode":"both"})")),
                  ParseError);
  CHECK_THROWS_AS(instance_from_json(json::parse(R"({"kind":"colon","I":{"n":2,"generators":[[1,0]]},"J":{"n":3},"v":[0,0]})")),
                  ParseError);
}
