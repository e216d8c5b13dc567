// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "discloc/bijections.hpp"
#include "discloc/io.hpp"
#include "discloc/ktheory.hpp"
#include "discloc/model.hpp"
#include "discloc/ring.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace discloc;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void require(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
  }
  Outcome done(const std::string& summary) const {
    if (first_failure_.empty()) return {true, summary + " (" + std::to_string(checks_) + " checks)"};
    return {false, first_failure_};
  }

 private:
  std::size_t checks_ = 0;
  std::string first_failure_;
};

std::string names(const FinCat& c, const ObjectSet& s) {
  std::string out = "{";
  for (const auto& n : c.names(s)) out += (out.size() > 1 ? "," : "") + n;
  return out + "}";
}

struct Corpus {
  std::vector<std::string> names;
  std::vector<FinCat> cats;
  std::vector<LocalizationPoset> posets;
};

const Corpus& corpus() {
  static const Corpus c = [] {
    Corpus out;
    for (const auto& n : testing::bicomplete_names()) {
      out.names.push_back(n);
      out.cats.push_back(testing::load(n));
      out.posets.push_back(enumerate_localizations(out.cats.back()));
    }
    return out;
  }();
  return c;
}

template <class F>
Outcome for_each_localization(const std::string& label, F&& f) {
  Check chk;
  std::size_t total = 0;
  const auto& cp = corpus();
  for (std::size_t k = 0; k < cp.cats.size(); ++k)
    for (std::size_t i = 0; i < cp.posets[k].structures.size(); ++i) {
      ++total;
      f(chk, cp.names[k] + " " + names(cp.cats[k], cp.posets[k].subcategories[i].members), cp.cats[k],
        cp.posets[k].structures[i]);
    }
  return chk.done(std::to_string(total) + " localizations on " + std::to_string(cp.cats.size()) +
                  " categories, " + label);
}

Outcome criterion1() {
  Check chk;
  std::string counts;
  for (int n = 2; n <= 6; ++n) {
    auto path = testing::corpus("chain" + std::to_string(n) + ".json");
    auto raw = io::parse_category(io::load_json(path));
    auto c = FinCat::build(raw);
    auto poset = enumerate_localizations(c);
    auto closures = oracle::closure_operators(oracle::poset_of(raw));
    std::set<std::set<std::string>> got;
    for (const auto& r : poset.subcategories) {
      auto v = c.names(r.members);
      got.insert(std::set<std::string>(v.begin(), v.end()));
    }
    std::size_t expected = std::size_t{1} << (n - 1);
    chk.require(poset.structures.size() == expected,
                "chain" + std::to_string(n) + ": " + std::to_string(poset.structures.size()) + " localizations");
    chk.require(closures.size() == expected, "chain" + std::to_string(n) + ": oracle count");
    chk.require(got == closures, "chain" + std::to_string(n) + ": fixed-point sets differ from the oracle");
    counts += (counts.empty() ? "" : ",") + std::to_string(poset.structures.size());
  }
  return chk.done("n=2..6 -> " + counts);
}

Outcome criterion2() {
  return for_each_localization("all axiom families", [](Check& chk, const std::string& where, const FinCat& c,
                                                         const ModelStructure& m) {
    auto v = verify_model_axioms(c, m);
    chk.require(v.holds, where + ": " + v.check + " " + v.detail);
  });
}

Outcome criterion3() {
  return for_each_localization("we ∩ fib = isos", [](Check& chk, const std::string& where, const FinCat& c,
                                                     const ModelStructure& m) {
    chk.require((m.we & m.fib) == isomorphisms(c), where);
  });
}

Outcome criterion4() {
  Check chk;
  std::size_t edges = 0;
  for (const auto& n : testing::bicomplete_names()) {
    auto rep = run_bijection_suite(testing::load(n));
    for (const Verdict* v : rep.verdicts()) chk.require(v->holds, n + ": " + v->check + " " + v->detail);
    edges += rep.order_edges_checked;
  }
  return chk.done(std::to_string(edges) + " order edges");
}

Outcome criterion5() {
  std::size_t diagrams = 0, pairs = 0;
  auto out = for_each_localization("replacement certificates", [&](Check& chk, const std::string& where,
                                                                   const FinCat& c, const ModelStructure& m) {
    auto rep = fibrant_replacement(c, m);
    diagrams += rep.diagrams_checked;
    pairs += rep.adjunction_pairs_checked;
    chk.require(rep.certificate.holds, where + ": " + rep.certificate.check + " " + rep.certificate.detail);
  });
  if (out.pass)
    out.detail += ", " + std::to_string(diagrams) + " diagrams, " + std::to_string(pairs) + " adjunction pairs";
  return out;
}

Outcome criterion6() {
  return for_each_localization("Ho ≃ fibrant subcategory", [](Check& chk, const std::string& where,
                                                             const FinCat& c, const ModelStructure& m) {
    auto ho = homotopy_category(c, m);
    chk.require(ho.certificate.holds, where + ": " + ho.certificate.check + " " + ho.certificate.detail);
    chk.require(ho.fibrant == fibrant_objects(c, m), where + ": fibrant set");
  });
}

Outcome criterion7() {
  std::size_t between = 0, in_fib = 0;
  auto out = for_each_localization("maps between fibrants", [&](Check& chk, const std::string& where,
                                                                const FinCat& c, const ModelStructure& m) {
    auto fibrant = fibrant_objects(c, m);
    for (MorId f = 0; f < static_cast<MorId>(c.morphism_count()); ++f)
      if (fibrant.contains(c.src(f)) && fibrant.contains(c.dst(f))) {
        ++between;
        in_fib += m.fib.contains(f) ? 1 : 0;
      }
    auto v = maps_between_fibrants_are_fibrations(c, m);
    chk.require(v.holds, where + ": " + v.detail);
  });
  out.pass = out.pass && between == in_fib;
  out.detail += ", " + std::to_string(in_fib) + "/" + std::to_string(between) + " in fib";
  return out;
}

Outcome criterion8() {
  Check chk;
  auto c = testing::load("diamond");
  auto via_op = colocalizations_via_op(c);
  auto direct = enumerate_colocalizations(c);
  chk.require(via_op.structures.size() == direct.structures.size(), "counts differ");
  auto v = same_poset(c, via_op, direct);
  chk.require(v.holds, v.check + " " + v.detail);
  return chk.done("diamond: " + std::to_string(via_op.structures.size()) + " via op, " +
                  std::to_string(direct.structures.size()) + " direct");
}

Outcome criterion9() {
  Check chk;
  std::vector<FiniteRing> tests;
  for (const auto& n : {"z2", "z4", "z6", "z2xz2", "z2_dual"})
    tests.push_back(io::parse_ring(io::load_json(testing::corpus(std::string("rings/") + n + ".json"))));
  struct Case {
    std::string file;
    bool expected;
  };
  std::string summary;
  for (const auto& k : std::vector<Case>{{"z4_to_z2", true},
                                         {"z6_to_z2", true},
                                         {"z2_to_z2_dual", false},
                                         {"z2_to_z2xz2", false},
                                         {"z4_identity", true}}) {
    auto j = io::load_json(testing::corpus("rings/" + k.file + ".json"));
    auto r = io::parse_ring(io::load_json(testing::corpus("rings/" + j.at("ring").get<std::string>() + ".json")));
    auto s = io::parse_ring(io::load_json(testing::corpus("rings/" + j.at("algebra").get<std::string>() + ".json")));
    auto map = io::parse_ring_map(r, s, j.at("map"));
    auto phi = make_hom(r, s, map);
    auto rep = localization_exists_verdict(phi);
    auto epi = oracle::epi_by_cancellation(r, s, map, tests);
    chk.require(rep.exists == k.expected, k.file + ": verdict");
    chk.require(epi.epi == k.expected, k.file + ": cancellation oracle");
    summary += (summary.empty() ? "" : ", ") + k.file + "=" + (rep.exists ? "yes" : "no") + " (" +
               rep.mult.tensor_order.str() + "/" + std::to_string(rep.mult.ring_order) + ")";
  }
  return chk.done(summary);
}

Outcome criterion10() {
  Check chk;
  std::size_t runs = 0;
  for (auto [p, bound] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}})
    for (auto we : {WeakChoice::isomorphisms, WeakChoice::all}) {
      std::string where = "p=" + std::to_string(p) + " bound=" + std::to_string(bound) +
                          (we == WeakChoice::all ? " we=all" : " we=isos");
      auto w = truncated_abelian(p, bound, we);
      auto pres = k0_presentation(w);
      auto k = k0_group(pres);
      chk.require(k.factors.empty(), where + ": K0 nontrivial");
      chk.require(k.smith_check.holds, where + ": " + k.smith_check.detail);
      ++runs;
    }
  return chk.done(std::to_string(runs) + " categories, K0 = 0");
}

Outcome criterion11() {
  Check chk;
  std::vector<std::string> seen;
  {
    auto raw = io::parse_category(io::load_json(testing::corpus("fixtures/bad/broken_associativity.json")));
    auto rep = validate_category(raw);
    chk.require(!rep.ok() && rep.law == "associativity" && !rep.witness.empty(), "broken associativity accepted");
    seen.push_back("associativity");
  }
  {
    auto sf = io::parse_structure(io::load_json(testing::corpus("fixtures/bad/dropped_fibration.json")));
    auto v = verify_model_axioms(sf.category, sf.structure);
    chk.require(!v.holds && !v.witness.empty(), "dropped fibration accepted");
    seen.push_back(v.check);
  }
  {
    auto j = io::load_json(testing::corpus("fixtures/bad/non_associative_mu.json"));
    auto c = FinCat::build(io::parse_category(j.at("category")));
    auto v = verify_monad(c, io::parse_monad(c, j.at("monad")));
    chk.require(!v.holds && v.check == "associativity" && !v.witness.empty(), "non-associative μ accepted");
    seen.push_back("μ " + v.check);
  }
  {
    auto dir = testing::corpus("fixtures/bad/non_iso_mult");
    auto r = io::parse_ring(io::load_json(dir / "ring.json"));
    auto s = io::parse_ring(io::load_json(dir / "algebra.json"));
    auto phi = make_hom(r, s, io::parse_ring_map(r, s, io::load_json(dir / "map.json")));
    auto rep = mult_map_is_iso(phi);
    chk.require(!rep.verdict.holds && !rep.verdict.witness.empty(), "non-iso multiplication accepted");
    seen.push_back("∇ kernel " + (rep.verdict.witness.empty() ? std::string("?") : rep.verdict.witness[0]));
  }
  std::string summary;
  for (const auto& s : seen) summary += (summary.empty() ? "" : "; ") + s;
  return chk.done("4 fixtures rejected: " + summary);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"chain localization counts vs closure operators", criterion1},
      {"model axioms on every localization", criterion2},
      {"acyclic fibrations are the isomorphisms", criterion3},
      {"Refl / Loc / IdemMonads bijections and orders", criterion4},
      {"fibrant replacement certificate", criterion5},
      {"homotopy category certificate", criterion6},
      {"maps between fibrant objects are fibrations", criterion7},
      {"colocalization duality on the diamond", criterion8},
      {"ring localization verdicts vs cancellation", criterion9},
      {"K0 triviality on truncated p-groups", criterion10},
      {"negative fixtures rejected with witnesses", criterion11},
  };
  int failures = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
  }
  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.2fs\n", static_cast<int>(criteria.size()) - failures, criteria.size(), secs);
  return failures == 0 ? 0 : 1;
}
