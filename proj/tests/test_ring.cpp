#include "doctest.h"

#include "discloc/error.hpp"
#include "discloc/ring.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace discloc;

namespace {

FiniteRing dual_numbers() { return polyquo(zn(2), {0, 0, 1}); }

std::vector<FiniteRing> test_rings() {
  return {zn(2), zn(3), zn(4), zn(6), product({zn(2), zn(2)}), dual_numbers()};
}

RingHom unique_hom(const FiniteRing& r, const FiniteRing& s) {
  auto homs = ring_homs(r, s);
  REQUIRE(homs.size() == 1);
  return make_hom(r, s, homs.front());
}

}  // namespace

TEST_SUITE("ringmod") {
  TEST_CASE("constructors") {
    CHECK(zn(4).size() == 4);
    auto d = dual_numbers();
    CHECK(d.size() == 4);
    auto x = *d.find("x");
    CHECK(d.times(x, x) == d.zero);
    CHECK(x != d.zero);
    CHECK(product({zn(2), zn(2)}).size() == 4);
    for (const auto& r : test_rings()) CHECK(validate_ring(r).holds);
    CHECK_THROWS_AS(zn(17), InputError);
    CHECK_THROWS_AS(polyquo(zn(2), {1, 0}), InputError);
  }

  TEST_CASE("broken tables are rejected") {
    auto r = zn(3);
    r.mul[1 * 3 + 2] = 1;
    CHECK_FALSE(validate_ring(r).holds);
    CHECK_THROWS_AS(make_ring(r), InputError);
  }

  TEST_CASE("hom enumeration matches brute force") {
    for (const auto& s : test_rings())
      for (const auto& t : test_rings()) CHECK(ring_homs(s, t) == oracle::all_ring_maps(s, t));
  }

  TEST_CASE("tensor squares") {
    auto z4 = zn(4);
    CHECK(tensor_square(identity_hom(z4)).order == 4);
    CHECK(tensor_square(unique_hom(zn(4), zn(2))).order == 2);
    CHECK(tensor_square(unique_hom(zn(6), zn(2))).order == 2);
    CHECK(tensor_square(unique_hom(zn(2), dual_numbers())).order == 16);
    CHECK(tensor_square(unique_hom(zn(2), product({zn(2), zn(2)}))).order == 16);
  }

  TEST_CASE("tensor order agrees with counting balanced biadditive maps") {
    for (const auto& r : test_rings())
      for (const auto& s : test_rings())
        for (const auto& map : ring_homs(r, s)) {
          CAPTURE(r.size());
          CAPTURE(s.size());
          auto phi = make_hom(r, s, map);
          auto t = tensor_square(phi);
          CHECK(t.smith_check.holds);
          CHECK(t.order == oracle::tensor_order_by_duality(r, s, map));
        }
  }

  TEST_CASE("tensor order is invariant under swapping the factors") {
    for (const auto& r : test_rings())
      for (const auto& s : test_rings())
        for (const auto& map : ring_homs(r, s)) {
          auto phi = make_hom(r, s, map);
          std::size_t n = s.size();
          ExponentLattice swapped(n * n, s.characteristic());
          for (const auto& row : tensor_relations(phi)) {
            std::vector<std::int64_t> sw(row.size());
            for (std::size_t x = 0; x < n; ++x)
              for (std::size_t y = 0; y < n; ++y) sw[y * n + x] = row[x * n + y];
            swapped.add(sw);
          }
          auto snf = smith_normal_form(swapped.basis());
          CHECK(group_order(invariant_factors(snf)) == tensor_square(phi).order);
        }
  }

  TEST_CASE("multiplication map verdicts") {
    auto check = [](const RingHom& phi, bool iso, long tensor, std::size_t ring) {
      auto rep = mult_map_is_iso(phi);
      CHECK(rep.well_defined.holds);
      CHECK(rep.verdict.holds == iso);
      CHECK(rep.tensor_order == tensor);
      CHECK(rep.ring_order == ring);
      CHECK(localization_exists_verdict(phi).exists == iso);
    };
    check(unique_hom(zn(4), zn(2)), true, 2, 2);
    check(unique_hom(zn(6), zn(2)), true, 2, 2);
    check(unique_hom(zn(2), dual_numbers()), false, 16, 4);
    check(unique_hom(zn(2), product({zn(2), zn(2)})), false, 16, 4);
    check(identity_hom(zn(4)), true, 4, 4);
  }

  TEST_CASE("iso verdict agrees with cancellation on every hom") {
    auto tests = test_rings();
    for (const auto& r : tests)
      for (const auto& s : tests)
        for (const auto& map : ring_homs(r, s)) {
          auto phi = make_hom(r, s, map);
          auto epi = oracle::epi_by_cancellation(r, s, map, tests);
          CHECK(mult_map_is_iso(phi).verdict.holds == epi.epi);
        }
  }

  TEST_CASE("non-unital map is rejected") {
    CHECK_THROWS_AS(make_hom(zn(2), zn(4), {0, 2}), InputError);
  }
}
