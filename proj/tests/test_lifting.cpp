#include "doctest.h"

#include "discloc/builders.hpp"
#include "discloc/error.hpp"
#include "discloc/lifting.hpp"
#include "support.hpp"

using namespace discloc;

namespace {

// Direct re-enumeration of E↓ over all squares, with no pruning.
MorphismClass naive_rlp(const FinCat& c, const MorphismClass& e) {
  MorphismClass out(c.morphism_count());
  int n = static_cast<int>(c.morphism_count());
  for (int f = 0; f < n; ++f) {
    bool ok = true;
    for (int g : e.members())
      for (int top = 0; top < n && ok; ++top)
        for (int bottom = 0; bottom < n && ok; ++bottom) {
          if (c.src(top) != c.src(g) || c.dst(top) != c.src(f)) continue;
          if (c.src(bottom) != c.dst(g) || c.dst(bottom) != c.dst(f)) continue;
          if (c.compose(f, top) != c.compose(bottom, g)) continue;
          bool lift = false;
          for (int d = 0; d < n && !lift; ++d)
            lift = c.src(d) == c.dst(g) && c.dst(d) == c.src(f) && c.compose(d, g) == top &&
                   c.compose(f, d) == bottom;
          ok = lift;
        }
    if (ok) out.insert(f);
  }
  return out;
}

}  // namespace

TEST_SUITE("lifting") {
  TEST_CASE("chain squares") {
    auto c = FinCat::build(build::chain(3));
    Square sq{c.morphism("0_1"), c.identity(c.object("2")), c.morphism("0_2"), c.morphism("1_2")};
    CHECK(lifts(c, sq) == std::vector<MorId>{c.morphism("1_2")});

    // g = 0→1 against f = id_0 needs a bottom 1 → 0; there are none.
    CHECK(commuting_squares(c, c.morphism("0_1"), c.identity(c.object("0"))).empty());
    CHECK(lifting_failure(c, c.morphism("0_1"), c.identity(c.object("0"))) == std::nullopt);
  }

  TEST_CASE("iso on the left always lifts") {
    auto c = FinCat::build(build::iso_pair());
    for (MorId f = 0; f < static_cast<MorId>(c.morphism_count()); ++f)
      for (const auto& sq : commuting_squares(c, c.morphism("f"), f)) CHECK(lifts(c, sq).size() == 1);
  }

  TEST_CASE("non-commuting square is rejected") {
    auto c = FinCat::build(build::chain(3));
    Square sq{c.morphism("0_1"), c.morphism("1_2"), c.identity(0), c.morphism("1_2")};
    CHECK_THROWS_AS(lifts(c, sq), InputError);
  }

  TEST_CASE("extreme lifting classes") {
    for (const auto& name : testing::all_names()) {
      CAPTURE(name);
      auto c = testing::load(name);
      CHECK(rlp_class(c, c.all_morphisms()) == isomorphisms(c));
      CHECK(llp_class(c, c.all_morphisms()) == isomorphisms(c));
      CHECK(rlp_class(c, isomorphisms(c)) == c.all_morphisms());
      CHECK(llp_class(c, isomorphisms(c)) == c.all_morphisms());
    }
  }

  TEST_CASE("rlp agrees with unpruned enumeration on every singleton") {
    for (const auto& name : testing::all_names()) {
      CAPTURE(name);
      auto c = testing::load(name);
      for (MorId g = 0; g < static_cast<MorId>(c.morphism_count()); ++g) {
        auto e = MorphismClass::of(c.morphism_count(), {g});
        CHECK(rlp_class(c, e) == naive_rlp(c, e));
      }
    }
    auto c = FinCat::build(build::chain(3));
    auto e = testing::mors(c, {"0_1"});
    auto r = rlp_class(c, e);
    CHECK(r == naive_rlp(c, e));
    // 0→1 against itself needs a map 1 → 0; 1→2 only ever meets top = 0→1.
    CHECK_FALSE(r.contains(c.morphism("0_1")));
    CHECK(r.contains(c.morphism("1_2")));
    CHECK_FALSE(r.contains(c.morphism("0_2")));
  }

  TEST_CASE("lifting class properties") {
    for (const auto& name : testing::all_names()) {
      CAPTURE(name);
      auto c = testing::load(name);
      std::size_t n = c.morphism_count();
      for (std::size_t mask = 0; mask < (std::size_t{1} << n) && mask < 64; ++mask) {
        MorphismClass e(n);
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1) e.insert(static_cast<int>(i));
        auto r = rlp_class(c, e);
        CHECK(rlp_class(c, llp_class(c, r)) == r);
        for (int f : r.members())
          for (int g : r.members())
            if (c.composable(g, f)) CHECK(r.contains(c.compose(g, f)));
        for (std::size_t extra = 0; extra < n; ++extra) {
          auto bigger = e;
          bigger.insert(static_cast<int>(extra));
          CHECK(rlp_class(c, bigger).is_subset_of(r));
        }
        // Pullbacks of members along any map that has one stay in the class.
        for (int f : r.members())
          for (MorId h = 0; h < static_cast<MorId>(n); ++h) {
            if (c.dst(h) != c.dst(f)) continue;
            auto pb = limit_search(c, LimitQuery::pullback(f, h));
            if (pb.exists) CHECK(r.contains(pb.cone->legs[1]));
          }
      }
    }
  }

  TEST_CASE("strong monos") {
    for (const auto& name : testing::all_names()) {
      CAPTURE(name);
      auto c = testing::load(name);
      auto sm = strong_monos(c);
      for (ObjId x = 0; x < static_cast<ObjId>(c.object_count()); ++x) CHECK(sm.contains(c.identity(x)));
      // Split monos.
      for (MorId f = 0; f < static_cast<MorId>(c.morphism_count()); ++f)
        for (MorId r = 0; r < static_cast<MorId>(c.morphism_count()); ++r)
          if (c.composable(r, f) && c.compose(r, f) == c.identity(c.src(f))) CHECK(sm.contains(f));
    }
    for (auto raw : {build::chain(4), build::diamond(), build::pentagon()}) {
      auto c = FinCat::build(raw);
      CHECK(strong_monos(c) == isomorphisms(c));
    }
  }

  TEST_CASE("finitely well-complete") {
    CHECK(is_finitely_well_complete(FinCat::build(build::chain(3))).holds);
    CHECK(is_finitely_well_complete(FinCat::build(build::diamond())).holds);
    CHECK_FALSE(is_finitely_well_complete(FinCat::build(RawCategory{{"x", "y"}, {}, {}})).holds);
  }

  TEST_CASE("trivial factorization systems") {
    for (const auto& name : testing::all_names()) {
      CAPTURE(name);
      auto c = testing::load(name);
      std::size_t n = c.morphism_count();
      FactorizationSystem a{isomorphisms(c), c.all_morphisms(), {}};
      FactorizationSystem b{c.all_morphisms(), isomorphisms(c), {}};
      for (MorId f = 0; f < static_cast<MorId>(n); ++f) {
        a.factor.push_back({c.identity(c.src(f)), f});
        b.factor.push_back({f, c.identity(c.dst(f))});
      }
      CHECK(verify_factorization_system(c, a).holds);
      CHECK(verify_factorization_system(c, b).holds);
      CHECK(factorizations_unique_up_to_iso(c, a).holds);
      CHECK(factorizations_unique_up_to_iso(c, b).holds);
    }
  }

  TEST_CASE("all/all is not a factorization system") {
    auto c = FinCat::build(build::chain(2));
    FactorizationSystem fs{c.all_morphisms(), c.all_morphisms(), {}};
    for (MorId f = 0; f < static_cast<MorId>(c.morphism_count()); ++f)
      fs.factor.push_back({f, c.identity(c.dst(f))});
    auto v = verify_factorization_system(c, fs);
    CHECK_FALSE(v.holds);
    CHECK_FALSE(v.witness.empty());
  }

  TEST_CASE("partial factor table is an input error") {
    auto c = FinCat::build(build::chain(2));
    FactorizationSystem fs{c.all_morphisms(), isomorphisms(c), {}};
    CHECK_THROWS_AS(verify_factorization_system(c, fs), InputError);
  }
}
