#include "doctest.h"

#include "discloc/builders.hpp"
#include "discloc/error.hpp"
#include "discloc/monad.hpp"
#include "support.hpp"

using namespace discloc;

TEST_SUITE("monadkit") {
  TEST_CASE("identity monad") {
    for (const auto& name : testing::all_names()) {
      CAPTURE(name);
      auto c = testing::load(name);
      auto m = identity_monad(c);
      CHECK(verify_monad(c, m).holds);
      CHECK(is_idempotent(c, m).holds);
      auto r = reflector_from_monad(c, m);
      CHECK(r.members == c.all_objects());
      CHECK(r.functor == identity_functor(c));
      auto same = monad_morphism(c, m, m);
      REQUIRE(same);
      CHECK(*same == identity_transformation(c, m.functor));
    }
  }

  TEST_CASE("identity reflector gives the identity monad") {
    auto c = FinCat::build(build::diamond());
    auto r = find_reflector(c, c.all_objects()).reflector;
    REQUIRE(r);
    CHECK(monad_from_reflector(c, *r) == identity_monad(c));
  }

  TEST_CASE("chain monads") {
    auto c2 = FinCat::build(build::chain(2));
    auto top = monad_from_reflector(c2, *find_reflector(c2, testing::objs(c2, {"1"})).reflector);
    CHECK(top.functor(0) == c2.object("1"));
    CHECK(top.functor(1) == c2.object("1"));
    CHECK(reflector_from_monad(c2, top).members == testing::objs(c2, {"1"}));

    auto c3 = FinCat::build(build::chain(3));
    auto t12 = monad_from_reflector(c3, *find_reflector(c3, testing::objs(c3, {"1", "2"})).reflector);
    CHECK(t12.functor(c3.object("0")) == c3.object("1"));
    CHECK(t12.functor(c3.object("1")) == c3.object("1"));
    CHECK(t12.functor(c3.object("2")) == c3.object("2"));

    auto t2 = monad_from_reflector(c3, *find_reflector(c3, testing::objs(c3, {"2"})).reflector);
    // Larger subcategory, smaller monad: T_{2} → T_{1,2} has no morphism,
    // the other direction does.
    CHECK_FALSE(monad_morphism(c3, t2, t12));
    auto back = monad_morphism(c3, t12, t2);
    REQUIRE(back);
    CHECK(verify_monad_morphism(c3, t12, t2, *back).holds);
  }

  TEST_CASE("unit is a monad morphism out of the identity") {
    for (const auto& name : testing::all_names()) {
      CAPTURE(name);
      auto c = testing::load(name);
      for (const auto& r : enumerate_replete_reflective(c)) {
        auto m = monad_from_reflector(c, r);
        CHECK(verify_monad_morphism(c, identity_monad(c), m, m.unit).holds);
        CHECK(monad_morphism(c, identity_monad(c), m));
      }
    }
  }

  TEST_CASE("reflector monads are lawful, idempotent and round-trip") {
    for (const auto& name : testing::all_names()) {
      CAPTURE(name);
      auto c = testing::load(name);
      for (const auto& r : enumerate_replete_reflective(c)) {
        auto m = monad_from_reflector(c, r);
        CHECK(verify_monad(c, m).holds);
        CHECK(is_idempotent(c, m).holds);
        CHECK(essential_image(c, m.functor) == r.members);
        auto back = reflector_from_monad(c, m);
        CHECK(back.members == r.members);
        CHECK(natural_equivalence(c, monad_from_reflector(c, back), m));
      }
    }
  }

  TEST_CASE("pointed endofunctor that is not idempotent") {
    auto c = FinCat::build(build::chain(3));
    Functor t{{1, 2, 2}, {}};
    t.on_morphisms.resize(c.morphism_count());
    for (MorId f = 0; f < static_cast<MorId>(c.morphism_count()); ++f)
      t.on_morphisms[static_cast<std::size_t>(f)] = c.hom(t(c.src(f)), t(c.dst(f))).front();
    REQUIRE(verify_functor(c, c, t).holds);
    NaturalTransformation eta;
    for (ObjId x = 0; x < 3; ++x) eta.components.push_back(c.hom(x, t(x)).front());
    auto v = is_idempotent(c, t, eta);
    CHECK_FALSE(v.holds);
    CHECK_FALSE(v.witness.empty());
  }

  TEST_CASE("non-associative multiplication is caught at associativity") {
    auto j = io::load_json(testing::corpus("fixtures/bad/non_associative_mu.json"));
    auto c = FinCat::build(io::parse_category(j.at("category")));
    auto m = io::parse_monad(c, j.at("monad"));
    auto v = verify_monad(c, m);
    CHECK_FALSE(v.holds);
    CHECK(v.check == "associativity");
    CHECK_FALSE(v.witness.empty());
    CHECK_THROWS_AS(reflector_from_monad(c, m), HypothesisError);
  }

  TEST_CASE("natural equivalence is an equivalence relation") {
    for (const auto& name : {"iso_pair", "diamond", "chain3"}) {
      CAPTURE(name);
      auto c = testing::load(name);
      std::vector<Monad> ms;
      for (const auto& r : enumerate_replete_reflective(c)) ms.push_back(monad_from_reflector(c, r));
      for (const auto& a : ms) {
        CHECK(natural_equivalence(c, a, a));
        for (const auto& b : ms) {
          CHECK(bool(natural_equivalence(c, a, b)) == bool(natural_equivalence(c, b, a)));
          for (const auto& d : ms)
            if (natural_equivalence(c, a, b) && natural_equivalence(c, b, d))
              CHECK(natural_equivalence(c, a, d));
        }
      }
    }
  }

  TEST_CASE("ill-shaped data") {
    auto c = FinCat::build(build::chain(2));
    Monad m = identity_monad(c);
    m.unit.components.pop_back();
    CHECK_THROWS_AS(verify_monad(c, m), ShapeError);
  }
}
