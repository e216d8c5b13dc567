#include "discloc/bijections.hpp"

namespace discloc {

namespace {

std::string describe(const FinCat& c, const ObjectSet& a) {
  std::string out;
  for (const auto& n : c.names(a)) out += (out.empty() ? "" : ",") + n;
  return "{" + out + "}";
}

}  // namespace

std::vector<const Verdict*> BijectionReport::verdicts() const {
  return {&refl_loc_refl, &loc_refl_loc,   &monad_round_trip,    &monads_lawful,
          &loc_antitone,  &monad_order,    &equivalence_relation};
}

bool BijectionReport::holds() const {
  for (const Verdict* v : verdicts())
    if (!v->holds) return false;
  return true;
}

BijectionReport run_bijection_suite(const FinCat& c) {
  BijectionReport out;
  out.poset = enumerate_localizations(c);
  const auto& refl = out.poset.subcategories;
  const auto& loc = out.poset.structures;
  const std::size_t k = refl.size();

  for (std::size_t i = 0; i < k && out.refl_loc_refl; ++i) {
    const Reflector back = reflector_of(c, loc[i]);
    if (back.members != refl[i].members)
      out.refl_loc_refl = Verdict::fail("Refl → Loc → Refl", "fibrant objects differ from the subcategory",
                                        {describe(c, refl[i].members), describe(c, back.members)});
  }
  for (std::size_t i = 0; i < k && out.loc_refl_loc; ++i) {
    const ModelStructure again = localization_from_reflector(c, reflector_of(c, loc[i]));
    if (!same_classes(again, loc[i]))
      out.loc_refl_loc = Verdict::fail("Loc → Refl → Loc", "rebuilt structure has different classes",
                                       {describe(c, refl[i].members)});
  }

  for (const auto& r : refl) out.monads.push_back(monad_from_reflector(c, r));
  for (std::size_t i = 0; i < k && out.monads_lawful; ++i) {
    if (auto v = verify_monad(c, out.monads[i]); !v) out.monads_lawful = v;
    else if (auto w = is_idempotent(c, out.monads[i]); !w) out.monads_lawful = w;
    if (!out.monads_lawful) out.monads_lawful.witness.insert(out.monads_lawful.witness.begin(), describe(c, refl[i].members));
  }
  for (std::size_t i = 0; i < k && out.monad_round_trip; ++i) {
    const Reflector r = reflector_from_monad(c, out.monads[i]);
    if (r.members != refl[i].members) {
      out.monad_round_trip = Verdict::fail("Refl → IdemMonads → Refl", "essential image differs",
                                           {describe(c, refl[i].members), describe(c, r.members)});
      break;
    }
    const Monad again = monad_from_reflector(c, r);
    if (!natural_equivalence(c, again, out.monads[i]))
      out.monad_round_trip = Verdict::fail("IdemMonads → Refl → IdemMonads",
                                           "rebuilt monad is not naturally equivalent",
                                           {describe(c, refl[i].members)});
  }

  out.loc_antitone = out.poset.order_reversal;
  for (std::size_t i = 0; i < k && out.monad_order; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      ++out.order_edges_checked;
      const bool included = refl[i].members.is_subset_of(refl[j].members);
      const auto alpha = monad_morphism(c, out.monads[j], out.monads[i]);
      if (alpha && !verify_monad_morphism(c, out.monads[j], out.monads[i], *alpha)) {
        out.monad_order = Verdict::fail("monad order", "search returned an invalid monad morphism",
                                        {describe(c, refl[j].members), describe(c, refl[i].members)});
        break;
      }
      if (included != alpha.has_value()) {
        out.monad_order = Verdict::fail("monad order",
                                        included ? "inclusion without a monad morphism T_B → T_A"
                                                 : "monad morphism T_B → T_A without inclusion",
                                        {describe(c, refl[i].members), describe(c, refl[j].members)});
        break;
      }
    }

  // natural equivalence is an equivalence relation on the induced monads
  std::vector<std::vector<bool>> eq(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) eq[i][j] = natural_equivalence(c, out.monads[i], out.monads[j]).has_value();
  for (std::size_t i = 0; i < k && out.equivalence_relation; ++i) {
    if (!eq[i][i]) {
      out.equivalence_relation = Verdict::fail("reflexive", "monad not equivalent to itself", {describe(c, refl[i].members)});
      break;
    }
    for (std::size_t j = 0; j < k && out.equivalence_relation; ++j) {
      if (eq[i][j] != eq[j][i])
        out.equivalence_relation = Verdict::fail("symmetric", "equivalence in one direction only",
                                                 {describe(c, refl[i].members), describe(c, refl[j].members)});
      for (std::size_t l = 0; l < k && out.equivalence_relation; ++l)
        if (eq[i][j] && eq[j][l] && !eq[i][l])
          out.equivalence_relation = Verdict::fail("transitive", "equivalence does not compose",
                                                   {describe(c, refl[i].members), describe(c, refl[j].members),
                                                    describe(c, refl[l].members)});
    }
  }
  return out;
}

}  // namespace discloc
