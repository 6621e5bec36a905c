#include <doctest.h>

#include <array>
#include <cmath>
#include <set>

#include "ndscape/errors.hpp"
#include "ndscape/generator.hpp"
#include "ndscape/netfit.hpp"
#include "support.hpp"

using namespace ndl;

TEST_CASE("roulette wheel frequencies follow the weights") {
  Rng rng(17);
  const std::array<double, 4> w{0.0, 0.25, 0.5, 0.25};
  const std::array<int, 4> feasible{0, 1, 2, 3};
  std::array<int, 4> count{};
  const int draws = 100000;
  for (int k = 0; k < draws; ++k) ++count[static_cast<std::size_t>(roulette_wheel(w, feasible, rng))];
  CHECK(count[0] == 0);
  // Chi-square with 2 degrees of freedom, 99% quantile 9.21.
  double chi = 0;
  for (int d = 1; d < 4; ++d) {
    const double expect = draws * w[static_cast<std::size_t>(d)];
    chi += std::pow(count[static_cast<std::size_t>(d)] - expect, 2) / expect;
  }
  CHECK(chi < 9.21);
}

TEST_CASE("roulette wheel edge cases") {
  Rng rng(1);
  const std::array<double, 4> spike{0, 0, 1, 0};
  const std::array<int, 3> some{1, 2, 3};
  for (int k = 0; k < 100; ++k) CHECK(roulette_wheel(spike, some, rng) == 2);

  const std::array<double, 4> low{0.5, 0.5, 0, 0};
  const std::array<int, 2> high{2, 3};
  int twos = 0;
  for (int k = 0; k < 10000; ++k) twos += roulette_wheel(low, high, rng) == 2;
  CHECK(std::abs(twos - 5000) < 300);

  const std::array<double, 3> negative{-0.2, 0.0, -1.0};
  const std::array<int, 3> all{0, 1, 2};
  for (int k = 0; k < 100; ++k) CHECK(roulette_wheel(negative, all, rng) >= 0);
  CHECK_THROWS_AS(roulette_wheel(low, std::span<const int>{}, rng), ContractError);
}

TEST_CASE("candidate order sorts by distance then value") {
  const Genotype origin{0b0110};
  const auto order = candidate_order(4, origin);
  REQUIRE(order.size() == 16);
  CHECK(order.front() == origin);
  for (std::size_t k = 1; k < order.size(); ++k) {
    const int a = hamming_distance(order[k - 1], origin), b = hamming_distance(order[k], origin);
    CHECK((a < b || (a == b && order[k - 1] < order[k])));
  }
}

TEST_CASE("feasible degrees of an untouched genotype span 0..N") {
  GenerationState state(16, window_distribution(0, 17, 16));
  const auto f = state.feasible_degrees(Genotype{0});
  CHECK(f.size() == 17);
  CHECK(f.front() == 0);
  CHECK(f.back() == 16);
}

TEST_CASE("feasible degrees count shared and admissible neighbours") {
  // s = 0 holds value v; loci 0..2 already hold v, loci 3..4 are open for v,
  // loci 5..6 are unaffected but forbid v, loci 7..9 hold other values.
  GenerationState state(10, DegreeDistribution::delta(10, 3));
  const auto v = state.add_value(0.5);
  state.assign(Genotype{0}, v);
  for (int i = 0; i < 3; ++i) state.assign(Genotype{1u << i}, v);
  for (int i = 5; i < 7; ++i) state.forbid(Genotype{1u << i}, v);
  for (int i = 7; i < 10; ++i) state.assign(Genotype{1u << i}, state.add_value(0.1 * i));
  CHECK(state.feasible_degrees(Genotype{0}) == std::vector<int>{3, 4, 5});

  GenerationState closed(2, DegreeDistribution::delta(2, 0));
  closed.assign(Genotype{0}, closed.add_value(0.1));
  closed.assign(Genotype{1}, closed.add_value(0.2));
  closed.assign(Genotype{2}, closed.add_value(0.3));
  CHECK(closed.feasible_degrees(Genotype{0}) == std::vector<int>{0});
  CHECK_THROWS_AS(closed.add_value(0.2), ContractError);
}

TEST_CASE("an unaffected genotype may join an affected neighbour's value") {
  GenerationState state(3, DegreeDistribution::delta(3, 1));
  const auto v = state.add_value(0.5);
  state.assign(Genotype{0b010}, v);
  const auto options = state.value_options(Genotype{0});
  REQUIRE(options.size() == 2);
  CHECK(options[0].id == GenerationState::kUnaffected);
  CHECK(options[0].degrees == DegreeRange{0, 2});
  CHECK(options[1].id == v);
  CHECK(options[1].degrees == DegreeRange{1, 3});
  state.forbid(Genotype{0}, v);
  CHECK(state.value_options(Genotype{0}).size() == 1);
}

TEST_CASE("delta targets give flat and all-distinct landscapes") {
  Rng rng(4);
  const Landscape flat = generate_nd(6, DegreeDistribution::delta(6, 6), rng);
  CHECK(extract_networks(flat).size() == 1);
  const Landscape spread = generate_nd(6, DegreeDistribution::delta(6, 0), rng);
  CHECK(degree_distribution(spread) == DegreeDistribution::delta(6, 0));
  CHECK(extract_networks(spread).size() == 64);
}

TEST_CASE("generator contracts") {
  Rng rng(1);
  CHECK_THROWS_AS(generate_nd(4, DegreeDistribution({0.5, 0.2, 0, 0, 0}), rng), ContractError);
  CHECK_THROWS_AS(generate_nd(17, DegreeDistribution::delta(17, 0), rng), ContractError);
  CHECK_THROWS_AS(generate_nd(0, DegreeDistribution::delta(0, 0), rng), ContractError);
  CHECK_THROWS_AS(generate_nd(4, DegreeDistribution::delta(5, 0), rng), ContractError);
}

TEST_CASE("freeze, distinct-fitness and determinism properties") {
  Rng seeds(99);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(seeds.below(9));
    const int w = 1 + static_cast<int>(seeds.below(static_cast<std::uint64_t>(n)));
    const int p = static_cast<int>(seeds.below(static_cast<std::uint64_t>(n - w + 2)));
    const auto target = window_distribution(p, w, n);
    const std::uint64_t seed = seeds.next();

    Rng rng(seed);
    std::vector<FreezeRecord> log;
    GeneratorOptions options;
    options.log = &log;
    const Landscape l = generate_nd(n, target, rng, options);
    REQUIRE(log.size() == l.size());

    // Every genotype is processed once and keeps the degree it was frozen with.
    std::set<std::uint32_t> seen;
    for (const auto& r : log) {
      CHECK(seen.insert(r.genotype.value).second);
      CHECK(neutral_degree(l, r.genotype) == r.degree);
    }
    for (std::size_t k = 1; k < log.size(); ++k)
      CHECK(hamming_distance(log[k - 1].genotype, log[0].genotype) <=
            hamming_distance(log[k].genotype, log[0].genotype));

    const auto nets = extract_networks(l);
    std::set<double> values;
    for (const auto& nn : nets) values.insert(nn.fitness);
    CHECK(values.size() == nets.size());

    Rng again(seed);
    CHECK(generate_nd(n, target, again) == l);
  }
}

TEST_CASE("budget depletes by one genotype's weight per step") {
  Rng rng(6);
  GenerationState state(4, window_distribution(1, 2, 4));
  const double before = state.budget()[0] + state.budget()[1] + state.budget()[2];
  const int d = state.process(Genotype{0}, rng);
  CHECK(state.frozen(Genotype{0}));
  double after = 0;
  for (double b : state.budget()) after += b;
  CHECK(after == doctest::Approx(before - 1.0 / 16));
  int shared = 0;
  for (int i = 0; i < 4; ++i) shared += state.value_id(Genotype{1u << i}) == state.value_id(Genotype{0});
  CHECK(shared == d);
}
