#include "doctest.h"

#include <set>

#include "discloc/builders.hpp"
#include "discloc/monad.hpp"
#include "discloc/reflect.hpp"
#include "support.hpp"

using namespace discloc;

namespace {

// A is reflective iff every X has some u: X → a (a ∈ A) with
// hom(a, b) → hom(X, b), k ↦ k ∘ u, bijective for all b ∈ A.
bool reflective_by_hom_bijection(const FinCat& c, const ObjectSet& a) {
  for (ObjId x = 0; x < static_cast<ObjId>(c.object_count()); ++x) {
    bool found = false;
    for (ObjId t : a.members()) {
      for (MorId u : c.hom(x, t)) {
        bool ok = true;
        for (ObjId b : a.members()) {
          std::set<MorId> image;
          for (MorId k : c.hom(t, b)) image.insert(c.compose(k, u));
          ok = ok && image.size() == c.hom(t, b).size() && image.size() == c.hom(x, b).size();
        }
        if (ok) found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::set<std::vector<int>> oracle_reflective(const FinCat& c) {
  std::set<std::vector<int>> out;
  std::size_t n = c.object_count();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    ObjectSet a(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) a.insert(static_cast<int>(i));
    if (iso_closure(c, a) == a && reflective_by_hom_bijection(c, a)) out.insert(a.members());
  }
  return out;
}

}  // namespace

TEST_SUITE("reflect") {
  TEST_CASE("repleteness") {
    auto c = FinCat::build(build::iso_pair());
    CHECK(is_replete(c, c.all_objects()).holds);
    CHECK_FALSE(is_replete(c, testing::objs(c, {"a"})).holds);
    auto chain = FinCat::build(build::chain(4));
    for (std::size_t mask = 0; mask < 16; ++mask) {
      ObjectSet a(4);
      for (int i = 0; i < 4; ++i)
        if (mask >> i & 1) a.insert(i);
      CHECK(is_replete(chain, a).holds);
    }
  }

  TEST_CASE("reflector search on the 2-chain") {
    auto c = FinCat::build(build::chain(2));
    auto top = find_reflector(c, testing::objs(c, {"1"}));
    REQUIRE(top.reflector);
    CHECK(top.reflector->functor(c.object("0")) == c.object("1"));
    CHECK(top.reflector->functor(c.object("1")) == c.object("1"));
    CHECK(verify_reflector(c, *top.reflector).holds);

    auto bottom = find_reflector(c, testing::objs(c, {"0"}));
    CHECK_FALSE(bottom.reflector);
    CHECK(bottom.witness == c.object("1"));

    auto all = find_reflector(c, c.all_objects());
    REQUIRE(all.reflector);
    CHECK(all.reflector->functor == identity_functor(c));
  }

  TEST_CASE("enumeration counts") {
    CHECK(enumerate_replete_reflective(FinCat::build(build::chain(2))).size() == 2);
    auto c3 = FinCat::build(build::chain(3));
    auto r3 = enumerate_replete_reflective(c3);
    CHECK(r3.size() == 4);
    for (const auto& r : r3) CHECK(r.members.contains(c3.object("2")));
    CHECK(enumerate_replete_reflective(FinCat::build(RawCategory{{"*"}, {}, {}})).size() == 1);
  }

  TEST_CASE("enumeration agrees with the hom-bijection oracle") {
    for (const auto& name : testing::all_names()) {
      CAPTURE(name);
      auto c = testing::load(name);
      std::set<std::vector<int>> got;
      for (const auto& r : enumerate_replete_reflective(c)) {
        CHECK(verify_reflector(c, r).holds);
        got.insert(r.members.members());
      }
      CHECK(got == oracle_reflective(c));
    }
  }

  TEST_CASE("coreflective enumeration is reflective enumeration of the opposite") {
    for (const auto& name : testing::all_names()) {
      CAPTURE(name);
      auto c = testing::load(name);
      std::set<std::vector<int>> co, op;
      for (const auto& r : enumerate_replete_coreflective(c)) {
        CHECK(verify_coreflector(c, r).holds);
        co.insert(r.members.members());
      }
      for (const auto& r : enumerate_replete_reflective(opposite(c))) op.insert(r.members.members());
      CHECK(co == op);
    }
  }

  TEST_CASE("inverted classes") {
    auto c2 = FinCat::build(build::chain(2));
    auto r = find_reflector(c2, testing::objs(c2, {"1"})).reflector;
    CHECK(inverted_class(c2, *r) == c2.all_morphisms());
    auto id = find_reflector(c2, c2.all_objects()).reflector;
    CHECK(inverted_class(c2, *id) == isomorphisms(c2));
    auto c3 = FinCat::build(build::chain(3));
    auto top = find_reflector(c3, testing::objs(c3, {"2"})).reflector;
    CHECK(inverted_class(c3, *top) == c3.all_morphisms());
  }

  TEST_CASE("inverted classes satisfy two-out-of-three and contain isos") {
    for (const auto& name : testing::all_names()) {
      CAPTURE(name);
      auto c = testing::load(name);
      for (const auto& r : enumerate_replete_reflective(c)) {
        auto w = inverted_class(c, r);
        CHECK(isomorphisms(c).is_subset_of(w));
        for (MorId f = 0; f < static_cast<MorId>(c.morphism_count()); ++f)
          for (MorId g = 0; g < static_cast<MorId>(c.morphism_count()); ++g) {
            if (!c.composable(g, f)) continue;
            int in = int(w.contains(f)) + int(w.contains(g)) + int(w.contains(c.compose(g, f)));
            CHECK(in != 2);
          }
      }
    }
  }

  TEST_CASE("chk factorization on the 3-chain") {
    auto c = FinCat::build(build::chain(3));
    auto r = find_reflector(c, testing::objs(c, {"1", "2"})).reflector;
    REQUIRE(r);
    CHECK(r->functor(c.object("0")) == c.object("1"));
    auto chk = chk_factorization(c, *r, c.morphism("0_2"));
    CHECK(chk.factor.e == c.morphism("0_1"));
    CHECK(chk.factor.m == c.morphism("1_2"));
    CHECK(chk.via_pullback);

    auto id = find_reflector(c, c.all_objects()).reflector;
    for (MorId f = 0; f < static_cast<MorId>(c.morphism_count()); ++f) {
      auto k = chk_factorization(c, *id, f);
      CHECK(k.factor.e == c.identity(c.src(f)));
      CHECK(k.factor.m == f);
    }
  }

  TEST_CASE("chk systems are factorization systems and use the pullback on lattices") {
    for (const auto& name : testing::bicomplete_names()) {
      CAPTURE(name);
      auto c = testing::load(name);
      bool lattice = name != "iso_pair";
      for (const auto& r : enumerate_replete_reflective(c)) {
        auto fs = chk_factorization_system(c, r);
        CHECK(fs.left == inverted_class(c, r));
        CHECK(verify_factorization_system(c, fs).holds);
        CHECK(factorizations_unique_up_to_iso(c, fs).holds);
        if (lattice)
          for (MorId f = 0; f < static_cast<MorId>(c.morphism_count()); ++f)
            CHECK(chk_factorization(c, r, f).via_pullback);
      }
    }
  }

  TEST_CASE("reflector idempotency and unit on members") {
    for (const auto& name : testing::all_names()) {
      CAPTURE(name);
      auto c = testing::load(name);
      for (const auto& r : enumerate_replete_reflective(c)) {
        CHECK(verify_natural(c, c, identity_functor(c), r.functor, r.unit).holds);
        CHECK(is_idempotent(c, r.functor, r.unit).holds);
        for (ObjId a : r.members.members()) CHECK(is_iso(c, r.unit[a]));
      }
    }
  }
}
