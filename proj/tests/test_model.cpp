#include "doctest.h"

#include "discloc/builders.hpp"
#include "discloc/error.hpp"
#include "discloc/model.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace discloc;

namespace {

Reflector onto(const FinCat& c, const std::vector<std::string>& members) {
  auto r = find_reflector(c, testing::objs(c, members)).reflector;
  REQUIRE(r);
  return *r;
}

}  // namespace

TEST_SUITE("modelstruct") {
  TEST_CASE("discrete structures") {
    for (auto raw : {build::chain(2), build::diamond()}) {
      auto c = FinCat::build(raw);
      auto m = discrete_structure(c);
      CHECK(m.we == isomorphisms(c));
      CHECK(m.cof == c.all_morphisms());
      CHECK(m.fib == c.all_morphisms());
      CHECK(verify_model_axioms(c, m).holds);
      CHECK(fibrant_objects(c, m) == c.all_objects());
      CHECK(maps_between_fibrants_are_fibrations(c, m).holds);
      auto ho = homotopy_category(c, m);
      CHECK(ho.certificate.holds);
      CHECK(ho.category.morphism_count() == c.morphism_count());
    }
    CHECK(discrete_structure(FinCat::build(build::chain(2))).we.size() == 2);
    CHECK_THROWS_AS(discrete_structure(FinCat::build(RawCategory{{"x", "y"}, {}, {}})), HypothesisError);
  }

  TEST_CASE("localizations of short chains") {
    auto c2 = FinCat::build(build::chain(2));
    auto id = localization_from_reflector(c2, onto(c2, {"0", "1"}));
    CHECK(same_classes(id, discrete_structure(c2)));

    auto top = localization_from_reflector(c2, onto(c2, {"1"}));
    CHECK(top.we == c2.all_morphisms());
    CHECK(top.fib == isomorphisms(c2));
    CHECK(verify_model_axioms(c2, top).holds);
    CHECK(fibrant_objects(c2, top) == testing::objs(c2, {"1"}));
    auto px = replace_object(c2, top, c2.object("0"));
    REQUIRE(px);
    CHECK(px->object == c2.object("1"));
    auto ho = homotopy_category(c2, top);
    CHECK(ho.certificate.holds);
    CHECK(ho.category.object_count() == 1);
    CHECK(ho.category.morphism_count() == 1);

    auto c3 = FinCat::build(build::chain(3));
    auto t2 = localization_from_reflector(c3, onto(c3, {"2"}));
    CHECK(t2.we == c3.all_morphisms());
    CHECK(verify_model_axioms(c3, t2).holds);
    auto t12 = localization_from_reflector(c3, onto(c3, {"1", "2"}));
    CHECK(fibrant_objects(c3, t12) == testing::objs(c3, {"1", "2"}));
    auto ho12 = homotopy_category(c3, t12);
    CHECK(ho12.certificate.holds);
    CHECK(ho12.category.object_count() == 2);
    CHECK(ho12.category.morphism_count() == 3);
  }

  TEST_CASE("enumeration on chains and the diamond") {
    auto p2 = enumerate_localizations(FinCat::build(build::chain(2)));
    CHECK(p2.structures.size() == 2);
    CHECK(p2.leq[0][1] != p2.leq[1][0]);
    auto p3 = enumerate_localizations(FinCat::build(build::chain(3)));
    CHECK(p3.structures.size() == 4);
    CHECK(p3.order_reversal.holds);
    CHECK(p3.distinct.holds);
  }

  TEST_CASE("lattice localizations match closure operators") {
    for (auto raw : {build::diamond(), build::pentagon(), build::chain(5)}) {
      auto c = FinCat::build(raw);
      auto closures = oracle::closure_operators(oracle::poset_of(raw));
      std::set<std::set<std::string>> got;
      for (const auto& r : enumerate_localizations(c).subcategories) {
        auto v = c.names(r.members);
        got.insert(std::set<std::string>(v.begin(), v.end()));
      }
      CHECK(got == closures);
    }
  }

  TEST_CASE("every localization on the corpus") {
    for (const auto& name : testing::bicomplete_names()) {
      CAPTURE(name);
      auto c = testing::load(name);
      auto poset = enumerate_localizations(c);
      CHECK(poset.order_reversal.holds);
      for (std::size_t i = 0; i < poset.structures.size(); ++i) {
        const auto& m = poset.structures[i];
        const auto& r = poset.subcategories[i];
        CHECK(verify_model_axioms(c, m).holds);
        CHECK(m.cof == c.all_morphisms());
        CHECK((m.we & m.fib) == isomorphisms(c));
        CHECK(fibrant_objects(c, m) == r.members);
        auto rep = fibrant_replacement(c, m);
        CHECK(rep.certificate.holds);
        CHECK(homotopy_category(c, m).certificate.holds);
        CHECK(homotopy_rigidity(c, m).holds);
        CHECK(maps_between_fibrants_are_fibrations(c, m).holds);
        for (MorId f = 0; f < static_cast<MorId>(c.morphism_count()); ++f) {
          auto fp = homotopy_relations(c, m, f, f);
          CHECK(fp.left);
          CHECK(fp.right);
          if (fibrant_objects(c, m).contains(c.src(f)))
            CHECK(is_iso(c, rep.unit[c.src(f)]));
        }
      }
    }
  }

  TEST_CASE("invalid hypotheses") {
    CHECK_THROWS_AS(enumerate_localizations(testing::load("parallel_pair")), HypothesisError);
    CHECK_THROWS_AS(enumerate_localizations(testing::load("monoid_z2")), HypothesisError);
  }

  TEST_CASE("dropped fibration fixture") {
    auto sf = io::parse_structure(io::load_json(testing::corpus("fixtures/bad/dropped_fibration.json")));
    auto v = verify_model_axioms(sf.category, sf.structure);
    CHECK_FALSE(v.holds);
    CHECK(v.check.find("llp") != std::string::npos);
    CHECK_FALSE(v.witness.empty());
  }

  TEST_CASE("a fibrant object whose identity is not a fibration") {
    auto c = FinCat::build(build::chain(3));
    auto m = localization_from_reflector(c, onto(c, {"1", "2"}));
    m.fib.erase(c.identity(c.object("1")));
    REQUIRE(fibrant_objects(c, m).contains(c.object("1")));
    auto v = maps_between_fibrants_are_fibrations(c, m);
    CHECK_FALSE(v.holds);
    CHECK(v.witness == std::vector<std::string>{"id_1"});
  }

  TEST_CASE("dropping any single fibration breaks the axioms") {
    auto c = FinCat::build(build::diamond());
    for (const auto& m : enumerate_localizations(c).structures)
      for (int f : m.fib.members()) {
        auto bad = m;
        bad.fib.erase(f);
        CHECK_FALSE(verify_model_axioms(c, bad).holds);
      }
  }

  TEST_CASE("colocalizations") {
    auto c2 = FinCat::build(build::chain(2));
    auto co = colocalizations_via_op(c2);
    CHECK(co.structures.size() == 2);
    for (const auto& r : co.subcategories) CHECK(r.members.contains(c2.object("0")));
    for (const auto& m : co.structures) CHECK(verify_model_axioms(c2, m).holds);

    auto d = FinCat::build(build::diamond());
    CHECK(colocalizations_via_op(d).structures.size() == enumerate_localizations(d).structures.size());
    CHECK(same_poset(d, colocalizations_via_op(d), enumerate_colocalizations(d)).holds);

    bool discrete_seen = false;
    for (const auto& m : colocalizations_via_op(d).structures)
      discrete_seen = discrete_seen || same_classes(m, discrete_structure(d));
    CHECK(discrete_seen);
  }

  TEST_CASE("order reversal on the diamond") {
    auto c = FinCat::build(build::diamond());
    auto p = enumerate_localizations(c);
    CHECK(p.structures.size() == 7);
    for (std::size_t i = 0; i < p.structures.size(); ++i)
      for (std::size_t j = 0; j < p.structures.size(); ++j)
        CHECK(p.subcategories[i].members.is_subset_of(p.subcategories[j].members) == p.leq[j][i]);
  }

  TEST_CASE("homotopy relations require parallel maps") {
    auto c = FinCat::build(build::chain(3));
    auto m = discrete_structure(c);
    CHECK_THROWS_AS(homotopy_relations(c, m, c.morphism("0_1"), c.morphism("1_2")), InputError);
  }
}
