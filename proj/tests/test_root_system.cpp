#include "alcove/root_system.hpp"

#include <map>

#include "alcove/error.hpp"
#include "doctest.h"

using namespace alcove;

namespace {

std::vector<RootSystemId> ci_types() {
  std::vector<RootSystemId> v;
  for (int n = 2; n <= 8; ++n) v.push_back({Family::A, n});
  for (int n = 2; n <= 8; ++n) v.push_back({Family::B, n});
  for (int n = 3; n <= 8; ++n) v.push_back({Family::C, n});
  for (int n = 4; n <= 8; ++n) v.push_back({Family::D, n});
  for (int n = 6; n <= 8; ++n) v.push_back({Family::E, n});
  v.push_back({Family::F, 4});
  v.push_back({Family::G, 2});
  return v;
}

std::size_t classical_count(const RootSystemId& id) {
  int n = id.rank;
  switch (id.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return id.rank == 6 ? 36 : (id.rank == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

}  // namespace

TEST_CASE("rank bounds are enforced") {
  CHECK_THROWS_AS(RootSystem::build({Family::C, 2}), domain_error);
  CHECK_THROWS_AS(RootSystem::build({Family::D, 3}), domain_error);
  CHECK_THROWS_AS(RootSystem::build({Family::E, 9}), domain_error);
  CHECK_THROWS_AS(RootSystem::build({Family::F, 5}), domain_error);
  CHECK_THROWS_AS(RootSystem::build({Family::A, 0}), domain_error);
  CHECK_NOTHROW(RootSystem::build({Family::A, 1}));
}

TEST_CASE("positive root counts match the classical values") {
  for (const auto& id : ci_types()) {
    RootSystem rs = RootSystem::build(id);
    INFO(id.name());
    CHECK(rs.positive_roots().size() == classical_count(id));
    for (const auto& r : rs.positive_roots())
      for (int k = 0; k < rs.rank(); ++k) {
        CHECK(den(r[k]) == 1);
        CHECK(r[k] >= 0);
      }
  }
}

TEST_CASE("highest root, marks and minuscule sets") {
  auto marks_of = [](const RootSystemId& id) {
    return RootSystem::build(id).marks();
  };
  CHECK(marks_of({Family::A, 5}) == std::vector<long>{1, 1, 1, 1, 1});
  CHECK(marks_of({Family::B, 5}) == std::vector<long>{1, 2, 2, 2, 2});
  CHECK(marks_of({Family::C, 5}) == std::vector<long>{2, 2, 2, 2, 1});
  CHECK(marks_of({Family::D, 6}) == std::vector<long>{1, 2, 2, 2, 1, 1});
  CHECK(marks_of({Family::E, 6}) == std::vector<long>{1, 2, 2, 3, 2, 1});
  CHECK(marks_of({Family::E, 7}) == std::vector<long>{2, 2, 3, 4, 3, 2, 1});
  CHECK(marks_of({Family::E, 8}) == std::vector<long>{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(marks_of({Family::F, 4}) == std::vector<long>{2, 3, 4, 2});
  CHECK(marks_of({Family::G, 2}) == std::vector<long>{2, 3});

  CHECK(RootSystem::build({Family::A, 4}).minuscule() == std::vector<int>{1, 2, 3, 4});
  CHECK(RootSystem::build({Family::B, 4}).minuscule() == std::vector<int>{1});
  CHECK(RootSystem::build({Family::C, 4}).minuscule() == std::vector<int>{4});
  CHECK(RootSystem::build({Family::D, 6}).minuscule() == std::vector<int>{1, 5, 6});
  CHECK(RootSystem::build({Family::E, 6}).minuscule() == std::vector<int>{1, 6});
  CHECK(RootSystem::build({Family::E, 7}).minuscule() == std::vector<int>{7});
  CHECK(RootSystem::build({Family::E, 8}).minuscule().empty());
  CHECK(RootSystem::build({Family::F, 4}).minuscule().empty());
  CHECK(RootSystem::build({Family::G, 2}).minuscule().empty());
}

TEST_CASE("coweights pair to delta with simple roots") {
  for (const auto& id : {RootSystemId{Family::A, 3}, RootSystemId{Family::B, 3},
                         RootSystemId{Family::F, 4}, RootSystemId{Family::G, 2},
                         RootSystemId{Family::E, 6}}) {
    RootSystem rs = RootSystem::build(id);
    for (int i = 1; i <= rs.rank(); ++i)
      for (int j = 1; j <= rs.rank(); ++j)
        CHECK(rs.inner(rs.coweight(i), rs.simple_root(j)) ==
              Rational(i == j ? 1 : 0));
  }
}

TEST_CASE("highest root dominance") {
  for (const auto& id : ci_types()) {
    RootSystem rs = RootSystem::build(id);
    for (int i = 1; i <= rs.rank(); ++i) {
      CHECK(rs.inner(rs.highest_root(), rs.coweight(i)) == Rational(rs.mark(i)));
      CHECK(rs.mark(i) >= 1);
    }
  }
}

TEST_CASE("alcove vertices") {
  RootSystem a2 = RootSystem::build({Family::A, 2});
  auto va = a2.alcove_vertices();
  REQUIRE(va.size() == 3);
  CHECK(va[0] == RatVec(2));
  CHECK(va[1] == a2.coweight(1));
  CHECK(va[2] == a2.coweight(2));

  RootSystem d4 = RootSystem::build({Family::D, 4});
  auto vd = d4.alcove_vertices();
  REQUIRE(vd.size() == 5);
  CHECK(vd[2] == d4.coweight(2) / Rational(2));

  RootSystem g2 = RootSystem::build({Family::G, 2});
  auto vg = g2.alcove_vertices();
  REQUIRE(vg.size() == 3);
  CHECK(vg[1] == g2.coweight(1) / Rational(2));
  CHECK(vg[2] == g2.coweight(2) / Rational(3));

  // general position: the n vectors from 0 are linearly independent
  for (const auto& id : ci_types()) {
    RootSystem rs = RootSystem::build(id);
    auto v = rs.alcove_vertices();
    RatMat m(rs.rank(), rs.rank());
    for (int i = 1; i <= rs.rank(); ++i)
      for (int k = 0; k < rs.rank(); ++k) m(k, i - 1) = v[i][k];
    CHECK(det(m) != 0);
  }
}

TEST_CASE("is_simple_system agrees with minusculeness") {
  for (const auto& id : {RootSystemId{Family::A, 3}, RootSystemId{Family::B, 3},
                         RootSystemId{Family::C, 3}, RootSystemId{Family::D, 4},
                         RootSystemId{Family::G, 2}, RootSystemId{Family::F, 4},
                         RootSystemId{Family::E, 6}}) {
    RootSystem rs = RootSystem::build(id);
    for (int j = 1; j <= rs.rank(); ++j) {
      INFO(id.name(), " j=", j);
      CHECK(rs.is_simple_system(j) == rs.is_minuscule(j));
    }
  }
  CHECK(RootSystem::build({Family::A, 3}).is_simple_system(2));
  CHECK_FALSE(RootSystem::build({Family::D, 4}).is_simple_system(2));
}

TEST_CASE("minuscule root is the lowest root of Pi_j") {
  for (const auto& id : {RootSystemId{Family::A, 4}, RootSystemId{Family::D, 5},
                         RootSystemId{Family::E, 6}}) {
    RootSystem rs = RootSystem::build(id);
    for (int j : rs.minuscule()) {
      RatVec aj = rs.simple_root(j);
      // subtracting any element of Pi_j from alpha_j never lands in the system
      CHECK_FALSE(rs.is_root(aj - (-rs.highest_root())));
      for (int i = 1; i <= rs.rank(); ++i) {
        if (i == j) continue;
        CHECK_FALSE(rs.is_root(aj - rs.simple_root(i)));
      }
    }
  }
}

TEST_CASE("scaled Gram leaves combinatorial data unchanged") {
  for (const auto& id : {RootSystemId{Family::B, 3}, RootSystemId{Family::G, 2}}) {
    RootSystem rs = RootSystem::build(id);
    RootSystem rs7 = RootSystem::build(id, 7);
    CHECK(rs.positive_roots() == rs7.positive_roots());
    CHECK(rs.marks() == rs7.marks());
    CHECK(rs.cartan() == rs7.cartan());
    for (int i = 1; i <= rs.rank(); ++i)
      CHECK(rs7.coweight(i) * Rational(7) == rs.coweight(i));
  }
}
