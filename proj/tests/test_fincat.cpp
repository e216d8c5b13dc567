#include "doctest.h"

#include "discloc/builders.hpp"
#include "discloc/error.hpp"
#include "discloc/fincat.hpp"
#include "support.hpp"

using namespace discloc;

TEST_SUITE("fincat") {
  TEST_CASE("terminal category and chain validate") {
    RawCategory one{{"*"}, {}, {}};
    CHECK(validate_category(one).ok());
    auto c = FinCat::build(one);
    CHECK(c.morphism_count() == 1);

    auto chain3 = FinCat::build(build::chain(3));
    CHECK(chain3.morphism_count() == 6);
    CHECK(validate_category(build::chain(3)).ok());
  }

  TEST_CASE("mistyped composite is a src/dst violation") {
    auto raw = build::chain(3);
    for (auto& e : raw.compose)
      if (e.g == "1_2" && e.f == "0_1") e.gf = "id_0";
    auto rep = validate_category(raw);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.kind == ValidationReport::Kind::law);
    CHECK(rep.law == "src/dst");
    CHECK_THROWS_AS(FinCat::build(raw), InputError);
  }

  TEST_CASE("broken associativity fixture names a triple") {
    auto raw = io::parse_category(io::load_json(testing::corpus("fixtures/bad/broken_associativity.json")));
    auto rep = validate_category(raw);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.law == "associativity");
    CHECK(rep.witness.size() == 3);
  }

  TEST_CASE("missing composite is structural") {
    auto raw = build::chain(3);
    raw.compose.clear();
    auto rep = validate_category(raw);
    CHECK(rep.kind == ValidationReport::Kind::structural);
    CHECK_FALSE(rep.missing.empty());
  }

  TEST_CASE("caps are enforced") {
    Caps caps;
    caps.max_objects = 3;
    CHECK_THROWS_AS(FinCat::build(build::chain(4), caps), InputError);
  }

  TEST_CASE("morphism predicates") {
    auto c = FinCat::build(build::chain(3));
    auto id = morphism_predicates(c, c.identity(0));
    CHECK(id.iso);
    CHECK(id.mono);
    CHECK(id.epi);
    auto f = morphism_predicates(c, c.morphism("0_1"));
    CHECK_FALSE(f.iso);
    CHECK(f.mono);
    CHECK(f.epi);

    // Only id_Y leaves Y, so each arrow of the free parallel pair cancels
    // vacuously on the left; on the right the two arrows are not separated
    // by anything out of X either.
    auto pp = FinCat::build(build::parallel_pair());
    auto a = morphism_predicates(pp, pp.morphism("a"));
    CHECK_FALSE(a.iso);
    CHECK(a.mono);
    CHECK(a.epi);

    auto iso = FinCat::build(build::iso_pair());
    CHECK(is_iso(iso, iso.morphism("f")));
    CHECK(inverse(iso, iso.morphism("f")) == iso.morphism("g"));
    CHECK(are_isomorphic(iso, iso.object("a"), iso.object("b")));

    auto z2 = FinCat::build(build::monoid_z2());
    CHECK(is_iso(z2, z2.morphism("g")));
    auto idem = FinCat::build(build::monoid_idempotent());
    auto e = morphism_predicates(idem, idem.morphism("e"));
    CHECK_FALSE(e.iso);
    CHECK_FALSE(e.mono);
    CHECK_FALSE(e.epi);
  }

  TEST_CASE("mono and epi agree with direct cancellation") {
    for (const auto& name : testing::all_names()) {
      CAPTURE(name);
      auto c = testing::load(name);
      for (MorId f = 0; f < static_cast<MorId>(c.morphism_count()); ++f) {
        bool mono = true, epi = true;
        for (MorId g = 0; g < static_cast<MorId>(c.morphism_count()); ++g)
          for (MorId h = 0; h < static_cast<MorId>(c.morphism_count()); ++h) {
            if (g == h || c.src(g) != c.src(h) || c.dst(g) != c.dst(h)) continue;
            if (c.dst(g) == c.src(f) && c.compose(f, g) == c.compose(f, h)) mono = false;
            if (c.src(g) == c.dst(f) && c.compose(g, f) == c.compose(h, f)) epi = false;
          }
        CHECK(is_mono(c, f) == mono);
        CHECK(is_epi(c, f) == epi);
      }
    }
  }

  TEST_CASE("opposite") {
    auto c = FinCat::build(build::chain(3));
    auto op = opposite(c);
    auto f = op.morphism("0_1");
    CHECK(op.src(f) == op.object("1"));
    CHECK(op.dst(f) == op.object("0"));
    CHECK(op.compose(op.morphism("0_1"), op.morphism("1_2")) == op.morphism("0_2"));

    auto m = FinCat::build(build::monoid({"x", "y"}, {{"x", "x"}, {"y", "y"}}));
    auto mop = opposite(m);
    CHECK(mop.compose(mop.morphism("x"), mop.morphism("y")) == mop.morphism("y"));
    CHECK(m.compose(m.morphism("x"), m.morphism("y")) == m.morphism("x"));

    for (const auto& name : testing::all_names()) {
      CAPTURE(name);
      auto d = testing::load(name);
      CHECK(opposite(opposite(d)) == d);
    }
  }

  TEST_CASE("identities are reserved ids") {
    RawCategory raw{{"a"}, {{"id_a", "a", "a"}}, {}};
    CHECK_FALSE(validate_category(raw).ok());
  }

  TEST_CASE("empty category validates") {
    RawCategory raw;
    CHECK(validate_category(raw).ok());
  }
}
