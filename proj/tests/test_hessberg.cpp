#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hessberg/hessenberg_space.hpp"

using namespace hessberg;

namespace {

// Brute-force oracle: filter all 2^(N-n) supersets of the simple roots for
// lower-closure, independently of the DFS enumeration.
std::vector<std::vector<int>> brute_force_spaces(const RootSystem& rs) {
  std::vector<int> nonsimple;
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k)
    if (rs.root(k).height >= 2) nonsimple.push_back(static_cast<int>(k));
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << nonsimple.size()); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < rs.rank(); ++i) idx.push_back(rs.simple_root_index(i));
    for (std::size_t b = 0; b < nonsimple.size(); ++b)
      if (mask & (1u << b)) idx.push_back(nonsimple[b]);
    if (check_hessenberg(rs, idx).empty()) {
      std::sort(idx.begin(), idx.end());
      out.push_back(idx);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("validation") {
  RootSystem rs("A2");
  // Delta is valid with dimension 2
  HessenbergSpace h = validate_hessenberg_roots(rs, {{1, 0}, {0, 1}});
  CHECK(h.dimension() == 2);
  // full Phi+ is valid (the G/B case)
  HessenbergSpace g = validate_hessenberg_roots(rs, {{1, 0}, {0, 1}, {1, 1}});
  CHECK(g.dimension() == 3);
  // missing simple root alpha2
  CHECK_THROWS_WITH_AS(validate_hessenberg_roots(rs, {{1, 0}, {1, 1}}),
                       doctest::Contains("missing-simple"), InputError);
  // lower-closure violation needs a rank-3 example: {simples, a1+a2+a3} without a1+a2
  RootSystem a3("A3");
  std::vector<IntVec> roots = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  CHECK_THROWS_WITH_AS(validate_hessenberg_roots(a3, roots),
                       doctest::Contains("not-lower-closed"), InputError);
  CHECK_THROWS_AS(validate_hessenberg_roots(rs, {{2, 5}}), InputError);
}

TEST_CASE("hessenberg functions") {
  RootSystem rs("A2");
  HessenbergSpace pet = from_hessenberg_function(rs, {2, 3, 3});
  CHECK(pet.dimension() == 2);
  CHECK(pet.contains(rs.root_index({1, 0})));
  CHECK(pet.contains(rs.root_index({0, 1})));
  CHECK_FALSE(pet.contains(rs.root_index({1, 1})));

  HessenbergSpace full = from_hessenberg_function(rs, {3, 3, 3});
  CHECK(full.dimension() == 3);

  CHECK_THROWS_AS(from_hessenberg_function(rs, {1, 2, 3}), InputError);  // h(i) = i kills (simple roots)
  CHECK_THROWS_AS(from_hessenberg_function(rs, {3, 2, 3}), InputError);  // not nondecreasing
  CHECK_THROWS_AS(from_hessenberg_function(rs, {2, 4, 4}), InputError);  // h(i) > n

  // round trip on every valid space, A2 and A3
  for (const char* label : {"A2", "A3"}) {
    RootSystem r2(label);
    for (const HessenbergSpace& h : enumerate_hessenberg_spaces(r2)) {
      std::vector<int> hf = to_hessenberg_function(r2, h);
      HessenbergSpace back = from_hessenberg_function(r2, hf);
      CHECK(back.root_indices == h.root_indices);
    }
  }
}

TEST_CASE("enumeration against brute force") {
  RootSystem a1("A1");
  CHECK(enumerate_hessenberg_spaces(a1).size() == 1);
  RootSystem a2("A2");
  CHECK(enumerate_hessenberg_spaces(a2).size() == 2);

  for (const char* label : {"A2", "B2", "A3", "G2"}) {
    RootSystem rs(label);
    auto oracle = brute_force_spaces(rs);
    auto got = enumerate_hessenberg_spaces(rs);
    REQUIRE(got.size() == oracle.size());
    std::vector<std::vector<int>> got_sets;
    for (const auto& h : got) got_sets.push_back(h.root_indices);
    std::sort(got_sets.begin(), got_sets.end());
    CHECK(got_sets == oracle);
  }
  RootSystem a5("A5");
  CHECK_THROWS_AS(enumerate_hessenberg_spaces(a5), ResourceError);
}

TEST_CASE("complement is upper closed") {
  for (const char* label : {"A3", "B3", "G2"}) {
    RootSystem rs(label);
    for (const HessenbergSpace& h : enumerate_hessenberg_spaces(rs)) {
      for (std::size_t a = 0; a < rs.num_positive_roots(); ++a) {
        if (h.contains(static_cast<int>(a))) continue;
        for (std::size_t b = 0; b < rs.num_positive_roots(); ++b)
          if (rs.root_order_leq(rs.root(a), rs.root(b)))
            CHECK_FALSE(h.contains(static_cast<int>(b)));
      }
    }
  }
}

TEST_CASE("codim one chains") {
  RootSystem a2("A2");
  auto chain = codim_one_chain(a2, full_space(a2));
  REQUIRE(chain.size() == 1);
  CHECK(chain[0].second == a2.root_index({1, 1}));
  CHECK(chain[0].first.dimension() == 2);

  CHECK(codim_one_chain(a2, minimal_space(a2)).empty());

  RootSystem a3("A3");
  auto c3 = codim_one_chain(a3, full_space(a3));
  REQUIRE(c3.size() == 3);
  std::size_t expect = full_space(a3).dimension();
  for (const auto& [space, removed] : c3) {
    --expect;
    CHECK(space.dimension() == expect);
    CHECK(a3.root(removed).height >= 2);
    CHECK(check_hessenberg(a3, space.root_indices).empty());
  }
  CHECK(c3.back().first.dimension() == 3);  // ends at Delta
}
