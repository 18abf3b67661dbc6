#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "rbd/error.hpp"
#include "rbd/hj.hpp"
#include "rbd/plumbing.hpp"

using namespace rbd;

using Terms = std::vector<std::int64_t>;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an rbd::Error");
  return ErrorCode::InvalidArgument;
}

const char* kE8 =
    "# E8: a branch vertex with arms of length 1, 2 and 4\n"
    "vertex c -2 0\n"
    "vertex a1 -2 0\nedge c a1\n"
    "vertex b1 -2 0\nvertex b2 -2 0\nedge c b1\nedge b1 b2\n"
    "vertex d1 -2 0\nvertex d2 -2 0\nvertex d3 -2 0\nvertex d4 -2 0\n"
    "edge c d1\nedge d1 d2\nedge d2 d3\nedge d3 d4\n";

}  // namespace

TEST_CASE("parse examples") {
  auto g = parse_plumbing("chain -4");
  REQUIRE(g.vertices().size() == 1);
  CHECK(g.vertices()[0].weight == -4);
  CHECK(g.vertices()[0].genus == 0);
  CHECK(g.vertices()[0].id == "c1v1");

  auto path = parse_plumbing("chain -2 -2 -2\n");
  CHECK(path.vertices().size() == 3);
  CHECK(path.edges().size() == 2);
  CHECK(path.degree(1) == 2);

  auto c31 = parse_plumbing("vertex a -5 0\nvertex b -2 0\nedge a b");
  CHECK(chain_string(c31) == cpq_string(3, 1));
  CHECK(intersection_matrix(c31) == intersection_matrix(PlumbingGraph::chain(cpq_string(3, 1))));

  auto two = parse_plumbing("chain -4\n  # comment\n\nchain -5 -2  # trailing\n");
  CHECK(two.vertices().size() == 3);
  CHECK(two.index_of("c2v2").has_value());
}

TEST_CASE("parse errors") {
  try {
    parse_plumbing("vertex a -2 0\nbogus a\n");
    FAIL("no throw");
  } catch (const SyntaxError& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK(e.line() == 2);
    CHECK(e.column() == 1);
  }
  try {
    parse_plumbing("vertex a-b -2 0\n");
    FAIL("no throw");
  } catch (const SyntaxError& e) {
    CHECK(e.column() == 8);
  }
  CHECK(code_of([] { parse_plumbing("vertex a -2\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_plumbing("edge a\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_plumbing("chain\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_plumbing("vertex a -2 0\nvertex a -3 0\n"); }) == ErrorCode::DuplicateId);
  CHECK(code_of([] { parse_plumbing("vertex a -2 0\nedge a b\n"); }) == ErrorCode::UnknownId);
  CHECK(code_of([] { parse_plumbing("vertex a -2x 0\n"); }) == ErrorCode::BadWeight);
  CHECK(code_of([] { parse_plumbing("vertex a -2 -1\n"); }) == ErrorCode::BadWeight);
  CHECK(code_of([] { parse_plumbing("chain -2 1.5\n"); }) == ErrorCode::BadWeight);
  CHECK(code_of([] { parse_plumbing("vertex a -2 0\nedge a a\n"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_plumbing("vertex c1v1 -2 0\nchain -3\n"); }) == ErrorCode::DuplicateId);
  try {
    parse_plumbing("chain -4\nedge x c1v1\n");
    FAIL("no throw");
  } catch (const SourceError& e) {
    CHECK(e.code() == ErrorCode::UnknownId);
    CHECK(e.line() == 2);
    CHECK(e.column() == 6);
    CHECK(std::string(e.what()) == "UnknownId: line 2, column 6: edge references unknown vertex 'x'");
  }
}

TEST_CASE("intersection matrices") {
  CHECK(intersection_matrix(parse_plumbing("chain -4")).rows() == std::vector<std::vector<Rational>>{{-4}});
  CHECK(intersection_matrix(parse_plumbing("chain -5 -2")).rows() ==
        std::vector<std::vector<Rational>>{{-5, 1}, {1, -2}});
  auto tri = parse_plumbing("vertex a -2 0\nvertex b -2 0\nvertex c -2 0\nedge a b\nedge b c\nedge c a\n");
  auto m = intersection_matrix(tri);
  CHECK(m(0, 1) == Rational(1));
  CHECK(m(1, 2) == Rational(1));
  CHECK(m(0, 2) == Rational(1));
  auto doubled = parse_plumbing("vertex a -2 0\nvertex b -2 0\nedge a b\nedge b a\n");
  CHECK(intersection_matrix(doubled)(0, 1) == Rational(2));
}

TEST_CASE("definiteness") {
  CHECK_FALSE(is_negative_definite(parse_plumbing("chain 0")));
  CHECK(is_negative_definite(parse_plumbing("chain -1")));
  CHECK(is_negative_definite(parse_plumbing(kE8)));
  for (std::int64_t p = 2; p <= 50; ++p)
    for (std::int64_t q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1) REQUIRE(is_negative_definite(PlumbingGraph::chain(cpq_string(p, q))));
}

TEST_CASE("boundary lens spaces") {
  CHECK(boundary_lens(parse_plumbing("chain -4")) == LensSpace(4, 1));
  CHECK(boundary_lens(parse_plumbing("chain -2 -2 -2")) == LensSpace(4, 3));
  CHECK(code_of([] { boundary_lens(parse_plumbing(kE8)); }) == ErrorCode::NotLinearChain);
  CHECK(code_of([] { boundary_lens(parse_plumbing("vertex a -2 1\n")); }) == ErrorCode::NotAllRational);
  CHECK(code_of([] { boundary_lens(parse_plumbing("chain -2 -1")); }) == ErrorCode::WeightOutOfRange);
  CHECK(code_of([] { boundary_lens(parse_plumbing("chain -2\nchain -2")); }) == ErrorCode::NotLinearChain);
  // Chain listed out of order still reads from an endpoint.
  auto shuffled = parse_plumbing("vertex m -3 0\nvertex x -2 0\nvertex y -5 0\nedge x m\nedge m y\n");
  CHECK(boundary_lens(shuffled) == lens_of_chain(HJString({2, 3, 5})));
  for (std::int64_t m = 2; m <= 200; ++m)
    for (std::int64_t q = 1; q < m; ++q)
      if (std::gcd(m, q) == 1) REQUIRE(boundary_lens(PlumbingGraph::chain(hj_expand(m, q))) == LensSpace(m, q));
}

TEST_CASE("find_cpq examples") {
  CHECK(find_cpq(parse_plumbing("chain -4"), 2, 1).size() == 1);
  CHECK(find_cpq(parse_plumbing("chain -5 -2"), 2, 1).empty());
  auto fwd = find_cpq(parse_plumbing("chain -5 -2"), 3, 1);
  REQUIRE(fwd.size() == 1);
  CHECK(fwd[0].vertex_ids == std::vector<std::string>{"c1v1", "c1v2"});
  auto back = find_cpq(parse_plumbing("chain -2 -5"), 3, 1);
  REQUIRE(back.size() == 1);
  CHECK(back[0].vertex_ids == std::vector<std::string>{"c1v2", "c1v1"});
  // Ambient edges are allowed at the ends of a configuration only.
  CHECK(find_cpq(parse_plumbing("chain -4 -2"), 2, 1).size() == 1);
  CHECK(cpq_string(5, 2).terms() == Terms{3, 5, 2});
  CHECK(find_cpq(parse_plumbing("chain -3 -5 -2"), 5, 2).size() == 1);
  CHECK(find_cpq(parse_plumbing("chain -3 -5 -2\nvertex x -1 0\nedge c1v2 x\n"), 5, 2).empty());
  CHECK(find_cpq(parse_plumbing("chain -3 -5 -2 -3"), 3, 1).size() == 1);
  // Eight disjoint (-4) spheres.
  CHECK(find_cpq(parse_plumbing("chain -4\nchain -4\nchain -4\nchain -4\nchain -4\nchain -4\nchain -4\nchain -4\n"), 2, 1)
            .size() == 8);
  // Higher genus vertices do not count.
  CHECK(find_cpq(parse_plumbing("vertex a -4 1\n"), 2, 1).empty());
  auto all = find_all_cpq(parse_plumbing("chain -4\nchain -2 -5\n"));
  // [2,5] read backwards is [5,2]: the same spheres are C_{3,2} and C_{3,1}.
  REQUIRE(all.size() == 3);
  CHECK(all[0].p == 2);
  CHECK(all[1].q == 1);
  CHECK(all[2].q == 2);
}

TEST_CASE("find_cpq on every cpq chain") {
  for (std::int64_t p = 2; p <= 50; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto s = cpq_string(p, q);
      auto matches = find_cpq(PlumbingGraph::chain(s), p, q);
      REQUIRE(matches.size() == 1);
      REQUIRE(matches[0].vertex_ids.size() == s.length());
      REQUIRE(find_cpq(PlumbingGraph::chain(s.reversed()), p, q).size() == 1);
    }
  }
}

namespace {

PlumbingGraph random_graph(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> size(1, 9), weight(-7, 3), genus(0, 2), coin(0, 3);
  PlumbingGraph g;
  const int n = size(rng);
  std::vector<std::string> ids;
  for (int k = 0; k < n; ++k) {
    ids.push_back("n" + std::to_string(k) + (coin(rng) == 0 ? "x" : ""));
    g.add_vertex(ids.back(), weight(rng), coin(rng) == 0 ? genus(rng) : 0);
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  const int edges = n > 1 ? size(rng) : 0;
  for (int k = 0; k < edges; ++k) {
    int a = pick(rng), b = pick(rng);
    if (a != b) g.add_edge(ids[static_cast<std::size_t>(a)], ids[static_cast<std::size_t>(b)]);
  }
  return g;
}

PlumbingGraph relabel(const PlumbingGraph& g, std::mt19937_64& rng) {
  std::vector<std::size_t> order(g.vertices().size());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  PlumbingGraph out;
  for (std::size_t i : order) {
    const auto& v = g.vertices()[i];
    out.add_vertex(v.id, v.weight, v.genus);
  }
  for (const auto& [a, b] : g.edges()) out.add_edge(g.vertices()[b].id, g.vertices()[a].id);
  return out;
}

}  // namespace

TEST_CASE("parse and print round trip") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 300; ++trial) {
    const PlumbingGraph g = random_graph(rng);
    const std::string text = print_plumbing(g);
    const PlumbingGraph back = parse_plumbing(text);
    REQUIRE(same_structure(g, back));
    REQUIRE(print_plumbing(back) == text);
  }
}

TEST_CASE("definiteness is invariant under relabeling") {
  std::mt19937_64 rng(1234);
  int definite = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const PlumbingGraph g = random_graph(rng);
    const PlumbingGraph h = relabel(g, rng);
    REQUIRE(same_structure(g, h));
    REQUIRE(is_negative_definite(g) == is_negative_definite(h));
    definite += is_negative_definite(g) ? 1 : 0;
  }
  CHECK(definite > 10);
}
