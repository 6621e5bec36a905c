#include <doctest.h>

#include <cmath>
#include <set>

#include "ndscape/core.hpp"
#include "ndscape/errors.hpp"
#include "ndscape/reference.hpp"
#include "support.hpp"

using namespace ndl;

TEST_CASE("neighbors flip one locus each, in locus order") {
  const auto a = neighbors(Genotype{0b000}, 3);
  CHECK(a == std::vector<Genotype>{{0b001}, {0b010}, {0b100}});
  const auto b = neighbors(Genotype{0b101}, 3);
  CHECK(b == std::vector<Genotype>{{0b100}, {0b111}, {0b001}});
  for (auto h : neighbors(Genotype{0x3A5}, 12)) CHECK(hamming_distance(h, Genotype{0x3A5}) == 1);
}

TEST_CASE("landscape construction validates its table") {
  CHECK_THROWS_AS(Landscape(3, std::vector<double>(7, 0.0)), ContractError);
  CHECK_THROWS_AS(Landscape(1, {0.0, NAN}), ContractError);
  CHECK_THROWS_AS(Landscape(0, {0.0}), ContractError);
  Landscape l(2, {0.1, 0.2, 0.3, 0.4});
  CHECK(l.max_fitness() == 0.4);
  CHECK_THROWS_AS(l.set(Genotype{1}, INFINITY), ContractError);
}

TEST_CASE("flat and all-distinct landscapes") {
  const Landscape flat = test::flat_landscape(4);
  for (std::uint32_t g = 0; g < 16; ++g) CHECK(neutral_degree(flat, Genotype{g}) == 4);
  CHECK(degree_distribution(flat) == DegreeDistribution::delta(4, 4));
  const Landscape distinct = test::distinct_landscape(4);
  for (std::uint32_t g = 0; g < 16; ++g) CHECK(neutral_degree(distinct, Genotype{g}) == 0);
  CHECK(degree_distribution(distinct) == DegreeDistribution::delta(4, 0));

  const auto flat_nets = extract_networks(test::flat_landscape(5));
  REQUIRE(flat_nets.size() == 1);
  CHECK(flat_nets[0].size() == 32);
  for (double c : flat_nets[0].centroid) CHECK(c == 0.5);
  CHECK(extract_networks(test::distinct_landscape(5)).size() == 32);
}

TEST_CASE("hand-built five-network landscape") {
  // Nested subcubes: 1xxxx, 01xxx, 001xx, 0001x, 0000x.
  std::vector<double> f(32);
  for (std::uint32_t g = 0; g < 32; ++g) f[g] = g >= 16 ? 0.9 : g >= 8 ? 0.7 : g >= 4 ? 0.5 : g >= 2 ? 0.3 : 0.1;
  const Landscape l(5, f);
  const auto nets = extract_networks(l);
  REQUIRE(nets.size() == 5);
  CHECK(nets[0].size() == 2);
  CHECK(nets[4].size() == 16);
  const auto roots = test::oracle_components(l);
  CHECK(std::set<std::uint32_t>(roots.begin(), roots.end()).size() == 5);
  for (const auto& nn : nets)
    for (auto m : nn.members) CHECK(roots[m.value] == nn.members.front().value);
}

TEST_CASE("royal road 16/4/4 has mean 14 and std 2") {
  const auto s = distribution_stats(degree_distribution(royal_road(16, 4, 4)));
  CHECK(s.mean == doctest::Approx(14.0).epsilon(1e-12));
  CHECK(s.std == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("distribution statistics") {
  const auto d = distribution_stats(DegreeDistribution::delta(6, 4));
  CHECK(d.mean == 4.0);
  CHECK(d.std == 0.0);
  const DegreeDistribution w34({0, 0, 0, 0.25, 0.25, 0.25, 0.25, 0});
  CHECK(distribution_stats(w34).mean == doctest::Approx(4.5));
  CHECK_THROWS_AS(distribution_stats(DegreeDistribution({0.5, 0.2})), ContractError);
  CHECK_THROWS_AS(DegreeDistribution({-0.1, 1.1}), ContractError);
}

TEST_CASE("rms distance is a norm distance") {
  const auto d0 = DegreeDistribution::delta(1, 0), d1 = DegreeDistribution::delta(1, 1);
  CHECK(rms_distance(d0, d0) == 0.0);
  CHECK(rms_distance(d0, d1) == doctest::Approx(std::sqrt(2.0)));
  CHECK_THROWS_AS(rms_distance(d0, DegreeDistribution::delta(2, 0)), ContractError);
  Rng rng(5);
  auto random_dist = [&] {
    std::vector<double> w(6);
    double t = 0;
    for (auto& v : w) t += v = rng.uniform();
    for (auto& v : w) v /= t;
    return DegreeDistribution(w);
  };
  for (int k = 0; k < 100; ++k) {
    const auto a = random_dist(), b = random_dist(), c = random_dist();
    CHECK(rms_distance(a, b) == rms_distance(b, a));
    CHECK(rms_distance(a, c) <= rms_distance(a, b) + rms_distance(b, c) + 1e-15);
  }
}

TEST_CASE("oracle suite: degrees, histograms and partitions on random landscapes") {
  Rng rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(10));
    const int levels = 1 + static_cast<int>(rng.below(4));
    const Landscape l = test::random_landscape(n, levels, rng);
    const auto oracle = test::oracle_degrees(l);
    const auto fast = neutral_degrees(l);
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) + 1, 0);
    long total = 0;
    for (std::size_t g = 0; g < l.size(); ++g) {
      REQUIRE(fast[g] == oracle[g]);
      CHECK(neutral_degree(l, Genotype{static_cast<std::uint32_t>(g)}) == oracle[g]);
      ++hist[static_cast<std::size_t>(oracle[g])];
      total += oracle[g];
    }
    CHECK(total % 2 == 0);
    CHECK(degree_histogram(l) == hist);
    const auto dist = degree_distribution(l);
    CHECK(dist.is_normalized());

    const auto part = partition_networks(l);
    const auto roots = test::oracle_components(l);
    std::size_t covered = 0;
    for (std::size_t k = 0; k < part.networks.size(); ++k) {
      const auto& nn = part.networks[k];
      covered += nn.size();
      if (k > 0) CHECK(part.networks[k - 1].members.front() < nn.members.front());
      std::vector<double> centroid(static_cast<std::size_t>(n), 0.0);
      for (auto m : nn.members) {
        CHECK(l[m] == nn.fitness);
        CHECK(roots[m.value] == nn.members.front().value);
        CHECK(part.label[m.value] == k);
        for (int i = 0; i < n; ++i) centroid[static_cast<std::size_t>(i)] += (m.value >> i) & 1u;
      }
      for (int i = 0; i < n; ++i)
        CHECK(nn.centroid[static_cast<std::size_t>(i)] ==
              doctest::Approx(centroid[static_cast<std::size_t>(i)] / static_cast<double>(nn.size())));
    }
    CHECK(covered == l.size());
    std::set<std::uint32_t> root_set(roots.begin(), roots.end());
    CHECK(root_set.size() == part.networks.size());
  }
}

TEST_CASE("network adjacency is symmetric and matches cut edges") {
  Rng rng(8);
  const Landscape l = test::random_landscape(7, 3, rng);
  const auto part = partition_networks(l);
  std::vector<std::set<std::uint32_t>> expect(part.networks.size());
  for (std::uint32_t g = 0; g < l.size(); ++g)
    for (int i = 0; i < 7; ++i) {
      const auto a = part.label[g], b = part.label[g ^ (1u << i)];
      if (a != b) expect[a].insert(b);
    }
  for (std::size_t k = 0; k < expect.size(); ++k)
    CHECK(std::vector<std::uint32_t>(expect[k].begin(), expect[k].end()) == part.adjacency[k]);
}
