#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "core/perm.hpp"

using ietlab::EndpointGraph;
using ietlab::Errc;
using ietlab::Error;
using ietlab::Permutation;

namespace {

// Independent component search on the endpoint identification graph:
// build the edge set straight from the three-case definition of sigma and
// union vertices across undirected edges. Shares no code with build_sigma's
// cycle-following.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool type_w_by_component_search(const Permutation& p) {
  int d = p.size();
  UnionFind uf(d + 1);
  uf.unite(0, p.preimage(1) - 1);
  for (int j = 1; j <= d; ++j) {
    if (p.image(j) == d)
      uf.unite(j, d);
    else
      uf.unite(j, p.preimage(p.image(j) + 1) - 1);
  }
  return uf.find(0) != uf.find(d);
}

void for_each_permutation(int d, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> images(d);
  std::iota(images.begin(), images.end(), 1);
  do {
    fn(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

}  // namespace

TEST_CASE("parsing") {
  Permutation p = Permutation::parse("2 1");
  CHECK(p.size() == 2);
  CHECK(p.image(1) == 2);
  CHECK(p.image(2) == 1);
  CHECK(Permutation::parse("3 2 1").to_string() == "3 2 1");
  CHECK_THROWS_AS(Permutation::parse("2 2 1"), Error);
  CHECK_THROWS_AS(Permutation::parse(""), Error);
  CHECK_THROWS_AS(Permutation::parse("0 1"), Error);
  CHECK_THROWS_AS(Permutation::parse("1 x"), Error);
}

TEST_CASE("irreducibility") {
  CHECK_FALSE(Permutation::identity(3).is_irreducible());
  CHECK(Permutation::parse("3 2 1").is_irreducible());
  CHECK_FALSE(Permutation::parse("2 1 3").is_irreducible());
  CHECK(Permutation::parse("2 1").is_irreducible());
  CHECK(Permutation::identity(1).is_irreducible());  // no 1 <= k < d exists
}

TEST_CASE("sigma on the worked examples") {
  EndpointGraph g = build_sigma(Permutation::parse("2 1"));
  CHECK(g.sigma == std::vector<int>{1, 2, 0});
  CHECK(g.orbits.size() == 1);
  CHECK_FALSE(is_type_w(g));
  CHECK(loop_through_zero(g) == std::vector<int>{0, 1, 2});

  g = build_sigma(Permutation::parse("3 2 1"));
  CHECK(g.sigma == std::vector<int>{2, 3, 0, 1});
  CHECK(g.orbits.size() == 2);
  CHECK(g.same_orbit(0, 2));
  CHECK(g.same_orbit(1, 3));
  CHECK(is_type_w(g));
  CHECK(loop_through_zero(g) == std::vector<int>{0, 2});
}

TEST_CASE("type W of the identity on 2 symbols") {
  // Reducible, but sigma is still defined: [0, 1, 2], three singleton
  // orbits, so 0 and d sit in distinct components.
  EndpointGraph g = build_sigma(Permutation::identity(2));
  CHECK(g.sigma == std::vector<int>{0, 1, 2});
  CHECK(g.orbits.size() == 3);
  CHECK(is_type_w(g));
}

TEST_CASE("loop through zero always starts at 0") {
  for_each_permutation(4, [](const Permutation& p) {
    auto loop = loop_through_zero(build_sigma(p));
    REQUIRE(!loop.empty());
    CHECK(loop.front() == 0);
  });
}

TEST_CASE("exhaustive d <= 7: sigma is a bijection and orbits partition") {
  for (int d = 1; d <= 7; ++d) {
    for_each_permutation(d, [&](const Permutation& p) {
      EndpointGraph g = build_sigma(p);
      std::set<int> seen(g.sigma.begin(), g.sigma.end());
      REQUIRE(static_cast<int>(g.sigma.size()) == d + 1);
      REQUIRE(static_cast<int>(seen.size()) == d + 1);
      REQUIRE(*seen.begin() == 0);
      REQUIRE(*seen.rbegin() == d);
      std::size_t total = 0;
      for (const auto& orbit : g.orbits) total += orbit.size();
      REQUIRE(total == static_cast<std::size_t>(d + 1));
    });
  }
}

TEST_CASE("exhaustive d <= 6: type W agrees with independent component search") {
  for (int d = 1; d <= 6; ++d) {
    for_each_permutation(d, [&](const Permutation& p) {
      REQUIRE(is_type_w(p) == type_w_by_component_search(p));
    });
  }
}

TEST_CASE("type W survives serialization round-trip") {
  for_each_permutation(5, [](const Permutation& p) {
    Permutation back = Permutation::parse(p.to_string());
    REQUIRE(back == p);
    REQUIRE(is_type_w(back) == is_type_w(p));
  });
}

TEST_CASE("permutation catalog lines") {
  auto entries = ietlab::parse_permutation_catalog(
      "# comment\n"
      "swap: 2 1\n"
      "rev3: 3 2 1  # inline comment\n"
      "\n");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].first == "swap");
  CHECK(entries[1].second == Permutation::parse("3 2 1"));
  CHECK_THROWS_AS(ietlab::parse_permutation_catalog("a: 2 1\na: 2 1\n"), Error);
  CHECK_THROWS_AS(ietlab::parse_permutation_catalog("missing colon\n"), Error);
  CHECK_THROWS_AS(ietlab::parse_permutation_catalog("bad: 2 2\n"), Error);
}
