#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "superlink/blocks.hpp"
#include "superlink/errors.hpp"
#include "superlink/oracle.hpp"
#include "test_support.hpp"

using namespace superlink;
using test::wt;

TEST_CASE("box grammar and enumeration") {
  const auto box = parse_box(2, "-1..1");
  CHECK(box.size() == 9);
  CHECK(box.str() == "[-1..1,-1..1]");
  const auto mixed = parse_box(3, "0..1,-2..2,1/2..1/2");
  CHECK(mixed.size() == 0);  // 1/2 is off the integer lattice
  const auto pts = parse_box(2, "0..1,0..2").points();
  REQUIRE(pts.size() == 6);
  CHECK(pts.front() == Weight::from_ints({0, 0}));
  CHECK(pts.back() == Weight::from_ints({1, 2}));
  CHECK_THROWS_AS(parse_box(2, "1..0"), ParseError);
  CHECK_THROWS_AS(parse_box(2, "0..1,0..1,0..1"), ParseError);
  CHECK_THROWS_AS(parse_box(2, "3"), ParseError);
  CHECK_THROWS_AS(WeightBox::cube(3, -10, 10).points(100), CapExceeded);
  CHECK(WeightBox::cube(2, -4, 4).enlarged().str() == "[-12..12,-12..12]");
}

TEST_CASE("bfs closure frozen values") {
  const auto p2 = test::p(2);
  const Weight zero = Weight::from_ints({0, 0});
  const auto box4 = WeightBox::cube(2, -4, 4);

  // No generators: only the seed.
  CHECK(bfs_linkage_closure(p2, zero, box4, LinkageGenerators{}) == std::vector<Weight>{zero});

  // p(2): the closure of 0 is every box point whose lambda+rho0 has exactly one odd entry.
  const auto closure = bfs_linkage_closure(p2, zero, box4, LinkageGenerators::for_family(p2));
  CHECK(closure.size() == 41);
  std::size_t expected = 0;
  for (const auto& pt : box4.points()) {
    const bool j1 = std::get<PLabel>(block_label(p2, pt)).j == 1;
    expected += j1;
    CHECK(j1 == std::binary_search(closure.begin(), closure.end(), pt));
  }
  CHECK(expected == 41);

  // A1 as gl(2): rho0 = (1/2,-1/2), so the orbit of 0 is {0, -alpha}.
  const auto a1 = test::red("A1");
  const auto orbit = bfs_linkage_closure(a1, zero, WeightBox::cube(2, -3, 3), LinkageGenerators::for_family(a1));
  CHECK(orbit == std::vector<Weight>{Weight::from_ints({-1, 1}), zero});

  CHECK_THROWS_AS(bfs_linkage_closure(p2, Weight::from_ints({9, 0}), box4, LinkageGenerators::for_family(p2)),
                  DomainError);
}

TEST_CASE("isotropic shifts use every integer step in the box") {
  const auto g = test::gl(1, 1);
  const auto box = WeightBox::cube(2, -5, 5);
  // lambda + rho = (a - 1/2 | b + 1/2) is atypical iff a + b = 0.
  const auto nb = linkage_neighbours(g, Weight::from_ints({0, 0}), box, LinkageGenerators::for_family(g));
  CHECK(nb.size() == 10);
  CHECK(std::binary_search(nb.begin(), nb.end(), Weight::from_ints({5, -5})));
  CHECK(std::binary_search(nb.begin(), nb.end(), Weight::from_ints({-5, 5})));
  CHECK(linkage_neighbours(g, Weight::from_ints({1, 0}), box, LinkageGenerators::for_family(g)).empty());
}

TEST_CASE("partition p(2) and p(3)") {
  const auto p2 = test::p(2);
  const auto r2 = partition_box(p2, WeightBox::cube(2, -6, 6), LinkageGenerators::for_family(p2));
  CHECK(r2.components.size() == 3);
  CHECK(r2.sound());
  CHECK(r2.complete());
  std::set<std::size_t> js;
  for (const auto& c : r2.components) {
    REQUIRE(c.labels.size() == 1);
    js.insert(std::get<PLabel>(label_from_json(c.labels[0])).j);
  }
  CHECK(js == std::set<std::size_t>{0, 1, 2});

  const auto p3 = test::p(3);
  const auto r3 = partition_box(p3, WeightBox::cube(3, -4, 4), LinkageGenerators::for_family(p3), true, 3);
  CHECK(r3.components.size() == 4);
  CHECK(r3.sound());
}

TEST_CASE("partition gl(1|1)") {
  const auto g = test::gl(1, 1);
  const auto r = partition_box(g, WeightBox::cube(2, -5, 5), LinkageGenerators::for_family(g));
  CHECK(r.sound());
  CHECK(r.complete());
  CHECK(r.components.size() == 111);
  std::size_t singletons = 0;
  for (const auto& c : r.components) {
    if (c.points.size() == 1) {
      ++singletons;
    } else {
      CHECK(c.points.size() == 11);
      CHECK(c.labels[0] == R"({"family":"gl","coreA":[],"coreB":[],"atyp":1})");
    }
  }
  CHECK(singletons == 110);
}

TEST_CASE("partition of a reductive box is the dot-orbit decomposition") {
  const auto a2 = test::red("A2");
  const auto box = WeightBox::cube(3, -2, 2);
  const auto r = partition_box(a2, box, LinkageGenerators::for_family(a2));
  CHECK(r.sound());
  for (const auto& c : r.components) {
    const auto orbit = orbit_dot(a2, c.points.front(), Parabolic::full(a2));
    for (const auto& pt : c.points) CHECK(std::binary_search(orbit.begin(), orbit.end(), pt));
    if (std::all_of(orbit.begin(), orbit.end(), [&](const Weight& w) { return box.contains(w); }))
      CHECK(c.points == orbit);
  }
  // Regular orbit fully inside the box.
  const auto orbit0 = orbit_dot(a2, Weight::from_ints({0, 0, 0}), Parabolic::full(a2));
  CHECK(orbit0.size() == 6);
}

TEST_CASE("partition is independent of the job count") {
  const auto g = test::gl(2, 1);
  const auto box = WeightBox::cube(3, -3, 3);
  const auto gens = LinkageGenerators::for_family(g);
  CHECK(partition_box(g, box, gens, true, 1).to_json() == partition_box(g, box, gens, true, 4).to_json());
}

TEST_CASE("closures are monotone in the box") {
  const auto o = test::osp(1);
  const auto gens = LinkageGenerators::for_family(o);
  const Weight seed = Weight::from_ints({1, 0});
  const auto small = bfs_linkage_closure(o, seed, WeightBox::cube(2, -3, 3), gens);
  const auto big = bfs_linkage_closure(o, seed, WeightBox::cube(2, -6, 6), gens);
  for (const auto& pt : small) CHECK(std::binary_search(big.begin(), big.end(), pt));
}

TEST_CASE("kl cross-check") {
  struct Case {
    const char* type;
    std::size_t order;
  };
  for (const auto& c : {Case{"A1", 2}, Case{"A2", 6}, Case{"A3", 24}, Case{"C2", 8}}) {
    CAPTURE(c.type);
    const auto report = kl_cross_check(test::red(c.type));
    CHECK(report.order == c.order);
    CHECK(report.pairs == c.order * c.order);
    CHECK(report.ok());
  }
  CHECK_THROWS_AS(kl_cross_check(test::red("A4"), 100), CapExceeded);
}

TEST_CASE("R-polynomial inversion, frozen S4 values") {
  const auto a3 = test::red("A3");
  const CoxeterGroup group(a3);
  const auto r = r_polynomials(group);
  const std::size_t w = group.index_of(from_word(a3, {1, 0, 2, 1}));
  const std::size_t x = group.index_of(from_word(a3, {1}));
  CHECK(kl_column_from_r(group, r, w)[x].str() == "1 + q");
  // R_{e,s} = q - 1 and R_{x,x} = 1.
  const std::size_t s = group.index_of(from_word(a3, {0}));
  CHECK(r[s][0].str() == "-1 + q");
  CHECK(r[w][w].str() == "1");

  std::size_t with_q = 0;
  for (std::size_t y = 0; y < group.size(); ++y) {
    const auto column = kl_column_from_r(group, r, y);
    for (const auto& poly : column)
      if (poly.degree() > 0) {
        CHECK(poly.str() == "1 + q");
        ++with_q;
      }
  }
  // x <= 3412 in {e, s2}; x <= 4231 in {e, s1, s3, s1 s3}.
  CHECK(with_q == 6);
}

TEST_CASE("Kostant partition function and simple weight spaces") {
  const auto a2 = test::red("A2");
  const auto c2 = test::red("C2");
  CHECK(kostant_partition(a2, {1, 1}) == 2);
  CHECK(kostant_partition(a2, {2, 2}) == 3);
  CHECK(kostant_partition(a2, {1, 0}) == 1);
  CHECK(kostant_partition(a2, {-1, 0}) == 0);
  CHECK(kostant_partition(c2, {1, 1}) == 2);
  CHECK(kostant_partition(c2, {2, 2}) == 4);

  // Adjoint of sl3: zero weight space has dimension 2.
  CHECK(simple_weight_dim(a2, Weight::from_ints({1, 0, -1}), {1, 1}) == 2);
  CHECK(simple_weight_dim(a2, Weight::from_ints({1, 0, -1}), {2, 2}) == 1);  // lowest root
  CHECK(simple_weight_dim(a2, Weight::from_ints({1, 0, -1}), {3, 3}) == 0);
  CHECK(simple_weight_dim(a2, Weight::from_ints({0, 0, 0}), {1, 0}) == 0);
  // Antidominant nu: L(nu) = M(nu).
  const Weight anti = Weight::from_ints({-3, 0, 1});
  CHECK(simple_weight_dim(a2, anti, {2, 2}) == kostant_partition(a2, {2, 2}));
  // sl2 highest weight 3: four weights.
  const auto a1 = test::red("A1");
  for (std::int64_t k = 0; k <= 4; ++k) CHECK(simple_weight_dim(a1, Weight::from_ints({3, 0}), {k}) == (k <= 3));
}

TEST_CASE("verma series by character subtraction") {
  const auto a1 = test::red("A1");
  const auto table = verma_series_rank_small(a1, Weight::from_ints({0, 0}));
  const Weight dom = Weight::from_ints({0, 0});
  const Weight anti = Weight::from_ints({-1, 1});
  CHECK(table.lookup(a1, dom, dom) == 1);
  CHECK(table.lookup(a1, dom, anti) == 1);
  CHECK(table.lookup(a1, anti, anti) == 1);
  CHECK(table.lookup(a1, anti, dom) == 0);

  // lambda + rho0 = 0: one-element orbit, M(lambda) simple.
  const Weight sing = test::wt(a1, "-1/2,1/2");
  const auto t1 = verma_series_rank_small(a1, sing);
  CHECK(t1.entries().size() == 1);
  CHECK(t1.lookup(a1, sing, sing) == 1);

  for (const char* type : {"A1", "A2", "C2"}) {
    CAPTURE(type);
    const auto d = test::red(type);
    const Weight lambda(d.dim);
    const auto [base, unused] = antidominant_rep(d, lambda, Parabolic::full(d));
    const auto series = verma_series_rank_small(d, lambda);
    const auto elems = enumerate_parabolic(d, Parabolic::full(d));
    CHECK(series.entries().size() == elems.size() * elems.size());
    for (const auto& w : elems)
      for (const auto& x : elems)
        CHECK(series.lookup(d, dot(d, w, base), dot(d, x, base)) == verma_mult(d, base, w, x));
  }
  CHECK_THROWS_AS(verma_series_rank_small(test::red("A3"), Weight(4)), UnsupportedInput);
  CHECK_THROWS_AS(verma_series_rank_small(test::p(2), Weight(2)), UnsupportedInput);
}

TEST_CASE("report json") {
  const auto p2 = test::p(2);
  const auto r = partition_box(p2, WeightBox::cube(2, -1, 1), LinkageGenerators::for_family(p2));
  const std::string json = r.to_json();
  CHECK(json.find(R"("schema":"superlink.partition/1")") != std::string::npos);
  CHECK(json.find(R"("sound":true)") != std::string::npos);
}

TEST_CASE("soundness detects a relation coarser than the labels") {
  const auto g = test::gl(1, 1);
  LinkageGenerators wrong;
  wrong.p_shifts = true;  // links typical weights across central characters
  const auto r = partition_box(g, WeightBox::cube(2, -2, 2), wrong);
  CHECK_FALSE(r.sound());
  CHECK_FALSE(r.soundness_failures.empty());
  LinkageGenerators none;
  const auto split = partition_box(g, WeightBox::cube(2, -2, 2), none);
  CHECK(split.sound());
  CHECK_FALSE(split.complete());
  CHECK_FALSE(split.enlarged_box.empty());
}
