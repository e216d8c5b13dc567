#include "commands.hpp"

#include <sstream>

#include "discloc/bijections.hpp"
#include "discloc/error.hpp"
#include "discloc/io.hpp"
#include "discloc/ktheory.hpp"
#include "discloc/lifting.hpp"
#include "discloc/limits.hpp"
#include "discloc/model.hpp"
#include "discloc/monad.hpp"
#include "discloc/reflect.hpp"
#include "discloc/ring.hpp"

namespace discloc::cli {

using nlohmann::json;

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string braces(const std::vector<std::string>& parts) { return "{" + join(parts, ", ") + "}"; }

json verdict_json(const Verdict& v) {
  json out{{"holds", v.holds}};
  if (!v.holds) {
    out["check"] = v.check;
    out["detail"] = v.detail;
    out["witness"] = v.witness;
  }
  return out;
}

std::string verdict_text(const Verdict& v) {
  if (v.holds) return "ok";
  std::string out = "FAILS " + v.check + ": " + v.detail;
  if (!v.witness.empty()) out += " [witness: " + join(v.witness) + "]";
  return out;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

const std::string& require(const std::string& value, const char* what) {
  if (value.empty()) throw InputError(std::string("missing ") + what);
  return value;
}

FinCat load(const RunConfig& cfg) { return io::load_category(require(cfg.category, "category file"), cfg.caps); }

ObjectSet parse_subcat(const FinCat& c, const std::string& list) {
  ObjectSet out(c.object_count());
  std::stringstream in(list);
  std::string id;
  while (std::getline(in, id, ','))
    if (!id.empty()) out.insert(c.object(id));
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse(const std::vector<std::vector<bool>>& leq) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t k = leq.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool covered = true;
      for (std::size_t m = 0; m < k && covered; ++m)
        if (m != i && m != j && leq[i][m] && leq[m][j]) covered = false;
      if (covered) out.emplace_back(i, j);
    }
  return out;
}

std::string poset_dot(const FinCat& c, const LocalizationPoset& p, const std::string& name) {
  std::string out = "digraph " + name + " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.structures.size(); ++i)
    out += "  L" + std::to_string(i) + " [label=" + quote(braces(c.names(p.subcategories[i].members))) + "];\n";
  for (auto [i, j] : hasse(p.leq)) out += "  L" + std::to_string(i) + " -> L" + std::to_string(j) + ";\n";
  return out + "}\n";
}

json poset_json(const FinCat& c, const LocalizationPoset& p) {
  json out = json::array();
  for (std::size_t i = 0; i < p.structures.size(); ++i) {
    json s = io::to_json(c, p.structures[i]);
    s["reflector"] = io::to_json(c, p.subcategories[i]);
    out.push_back(s);
  }
  return out;
}

json hasse_json(const LocalizationPoset& p) {
  json out = json::array();
  for (auto [i, j] : hasse(p.leq)) out.push_back({i, j});
  return out;
}

Outcome validate(const RunConfig& cfg) {
  const RawCategory raw = io::parse_category(io::load_json(require(cfg.category, "category file")));
  const ValidationReport r = validate_category(raw, cfg.caps);
  Outcome out;
  out.report["valid"] = r.ok();
  if (r.kind == ValidationReport::Kind::structural) throw InputError(r.message);
  if (!r.ok()) {
    out.status = 1;
    out.report["law"] = r.law;
    out.report["message"] = r.message;
    out.report["witness"] = r.witness;
    out.text = "category: FAILS " + r.law + ": " + r.message + " [witness: " + join(r.witness) + "]\n";
    return out;
  }
  const FinCat c = FinCat::build(raw, cfg.caps);
  out.report["objects"] = c.object_count();
  out.report["morphisms"] = c.morphism_count();
  out.report["thin"] = is_thin(c);
  json kinds = json::object();
  std::string table;
  for (std::size_t f = 0; f < c.morphism_count(); ++f) {
    const auto k = morphism_predicates(c, static_cast<MorId>(f));
    kinds[c.morphism_name(static_cast<MorId>(f))] = {{"iso", k.iso}, {"mono", k.mono}, {"epi", k.epi}};
    table += "  " + c.morphism_name(static_cast<MorId>(f)) + ": " + c.object_name(c.src(static_cast<MorId>(f))) +
             " → " + c.object_name(c.dst(static_cast<MorId>(f))) + (k.iso ? " iso" : "") + (k.mono ? " mono" : "") +
             (k.epi ? " epi" : "") + "\n";
  }
  out.report["morphism_kinds"] = kinds;
  out.text = "category: ok (" + std::to_string(c.object_count()) + " objects, " + std::to_string(c.morphism_count()) +
             " morphisms" + (is_thin(c) ? ", thin" : "") + ")\n" + table;
  return out;
}

Outcome limits(const RunConfig& cfg) {
  const FinCat c = load(cfg);
  Outcome out;
  const auto b = is_finitely_bicomplete(c);
  const auto t = terminal_object(c);
  const auto i = initial_object(c);
  out.report["terminal"] = t ? json(c.object_name(*t)) : json(nullptr);
  out.report["initial"] = i ? json(c.object_name(*i)) : json(nullptr);
  out.report["finitely_bicomplete"] = b.holds;
  if (!b.holds) out.report["missing"] = b.missing_description;
  out.report["thin"] = b.thin;
  out.text = "terminal: " + (t ? c.object_name(*t) : std::string("none")) + "\n" +
             "initial: " + (i ? c.object_name(*i) : std::string("none")) + "\n" +
             "finitely bicomplete: " + (b.holds ? std::string("yes") : "no (missing " + b.missing_description + ")") + "\n";
  bool fwc_holds = false;
  if (b.holds) {
    const auto w = is_finitely_well_complete(c);
    fwc_holds = w.holds;
    out.report["finitely_well_complete"] = w.holds;
    out.report["strong_monos"] = c.names(strong_monos(c));
    out.report["intersection_families"] = w.families_checked;
    out.text += "strong monos: " + braces(c.names(strong_monos(c))) + "\n";
    out.text += "finitely well-complete: " + std::string(w.holds ? "yes" : "no (" + w.failure + ")") + "\n";
  }
  out.status = b.holds && fwc_holds ? 0 : 1;
  return out;
}

Outcome enumerate(const RunConfig& cfg) {
  const FinCat c = load(cfg);
  const LocalizationPoset p = enumerate_localizations(c);
  Outcome out;
  bool all = true;
  json axioms = json::array();
  std::string text = std::to_string(p.structures.size()) + " localizations\n";
  for (std::size_t i = 0; i < p.structures.size(); ++i) {
    const auto& m = p.structures[i];
    const Verdict v = verify_model_axioms(c, m);
    all = all && v.holds;
    axioms.push_back(verdict_json(v));
    text += "L" + std::to_string(i) + " " + braces(c.names(p.subcategories[i].members)) + "\n";
    text += "  we:  " + braces(c.names(m.we)) + "\n";
    text += "  fib: " + braces(c.names(m.fib)) + "\n";
    text += "  axioms: " + verdict_text(v) + "\n";
  }
  std::string order;
  for (auto [i, j] : hasse(p.leq)) order += " L" + std::to_string(i) + "≤L" + std::to_string(j);
  text += "order (we ⊆):" + (order.empty() ? std::string(" none") : order) + "\n";
  text += "order reversal: " + verdict_text(p.order_reversal) + "\n";
  text += "distinct: " + verdict_text(p.distinct) + "\n";
  out.report["count"] = p.structures.size();
  out.report["structures"] = poset_json(c, p);
  out.report["axioms"] = axioms;
  out.report["hasse"] = hasse_json(p);
  out.report["order_reversal"] = verdict_json(p.order_reversal);
  out.report["distinct"] = verdict_json(p.distinct);
  out.text = text;
  out.dot = poset_dot(c, p, "localizations");
  out.status = all && p.order_reversal.holds && p.distinct.holds ? 0 : 1;
  return out;
}

Outcome verify_model(const RunConfig& cfg) {
  const auto file = io::parse_structure(io::load_json(require(cfg.structure, "--structure")), cfg.caps);
  const Verdict v = verify_model_axioms(file.category, file.structure);
  Outcome out;
  out.report["axioms"] = verdict_json(v);
  out.text = "model axioms: " + verdict_text(v) + "\n";
  out.status = v.holds ? 0 : 1;
  return out;
}

Outcome homotopy(const RunConfig& cfg) {
  const FinCat c = load(cfg);
  const LocalizationPoset p = enumerate_localizations(c);
  Outcome out;
  bool all = true;
  json rows = json::array();
  for (std::size_t i = 0; i < p.structures.size(); ++i) {
    const auto& m = p.structures[i];
    if (!cfg.subcat.empty() && p.subcategories[i].members != parse_subcat(c, cfg.subcat)) continue;
    const FibrantReplacement fr = fibrant_replacement(c, m);
    const HomotopyCategoryView ho = homotopy_category(c, m);
    const Verdict rigid = homotopy_rigidity(c, m);
    const Verdict fib = maps_between_fibrants_are_fibrations(c, m);
    all = all && fr.certificate.holds && ho.certificate.holds && rigid.holds && fib.holds;
    json replacement = json::object();
    std::string rtext;
    for (std::size_t x = 0; x < c.object_count(); ++x) {
      const ObjId o = static_cast<ObjId>(x);
      replacement[c.object_name(o)] = c.morphism_name(fr.unit[o]);
      rtext += " " + c.object_name(o) + "↦" + c.object_name(fr.functor(o));
    }
    rows.push_back({{"subcategory", c.names(p.subcategories[i].members)},
                    {"fibrant", c.names(ho.fibrant)},
                    {"replacement", replacement},
                    {"replacement_certificate", verdict_json(fr.certificate)},
                    {"diagrams_checked", fr.diagrams_checked},
                    {"adjunction_pairs_checked", fr.adjunction_pairs_checked},
                    {"equivalence_certificate", verdict_json(ho.certificate)},
                    {"rigidity", verdict_json(rigid)},
                    {"fibrant_maps_are_fibrations", verdict_json(fib)}});
    out.text += "L" + std::to_string(i) + " " + braces(c.names(p.subcategories[i].members)) + "\n";
    out.text += "  Ho ≃ fibrant subcategory " + braces(c.names(ho.fibrant)) + ": " + verdict_text(ho.certificate) + "\n";
    out.text += "  P:" + rtext + "  (" + verdict_text(fr.certificate) + ")\n";
    out.text += "  homotopy rigidity: " + verdict_text(rigid) + "\n";
    out.text += "  maps between fibrants are fibrations: " + verdict_text(fib) + "\n";
  }
  if (rows.empty()) throw InputError("no localization has subcategory {" + cfg.subcat + "}");
  out.report["localizations"] = rows;
  out.status = all ? 0 : 1;
  return out;
}

Outcome monads(const RunConfig& cfg) {
  Outcome out;
  if (!cfg.monad.empty()) {
    const json j = io::load_json(cfg.monad);
    const FinCat c = j.contains("category") ? FinCat::build(io::parse_category(j.at("category")), cfg.caps) : load(cfg);
    const Monad m = io::parse_monad(c, j.contains("monad") ? j.at("monad") : j);
    const Verdict laws = verify_monad(c, m);
    out.report["laws"] = verdict_json(laws);
    out.text = "monad laws: " + verdict_text(laws) + "\n";
    if (laws.holds) {
      const Verdict idem = is_idempotent(c, m);
      out.report["idempotent"] = verdict_json(idem);
      out.report["essential_image"] = c.names(essential_image(c, m.functor));
      out.text += "idempotent: " + verdict_text(idem) + "\n";
      out.text += "essential image: " + braces(c.names(essential_image(c, m.functor))) + "\n";
    }
    out.status = laws.holds ? 0 : 1;
    return out;
  }
  const FinCat c = load(cfg);
  const auto refl = enumerate_replete_reflective(c);
  json rows = json::array();
  bool all = true;
  out.text = std::to_string(refl.size()) + " idempotent monads (one per replete reflective subcategory)\n";
  std::vector<Monad> ms;
  for (const auto& r : refl) {
    const Monad m = monad_from_reflector(c, r);
    const Verdict laws = verify_monad(c, m);
    const Verdict idem = is_idempotent(c, m);
    all = all && laws.holds && idem.holds;
    json row = io::to_json(c, m);
    row["image"] = c.names(r.members);
    row["laws"] = verdict_json(laws);
    row["idempotent"] = verdict_json(idem);
    rows.push_back(row);
    out.text += "T" + std::to_string(ms.size()) + " image " + braces(c.names(r.members)) + ": laws " +
                verdict_text(laws) + ", idempotent " + verdict_text(idem) + "\n";
    ms.push_back(m);
  }
  json edges = json::array();
  std::string order;
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = 0; j < ms.size(); ++j)
      if (i != j && monad_morphism(c, ms[i], ms[j])) {
        edges.push_back({i, j});
        order += " T" + std::to_string(i) + "→T" + std::to_string(j);
      }
  out.text += "monad morphisms:" + (order.empty() ? std::string(" none") : order) + "\n";
  out.report["monads"] = rows;
  out.report["morphisms"] = edges;
  out.status = all ? 0 : 1;
  return out;
}

Outcome bijections(const RunConfig& cfg) {
  const FinCat c = load(cfg);
  const BijectionReport r = run_bijection_suite(c);
  Outcome out;
  const std::vector<std::pair<const char*, const Verdict*>> rows{
      {"Refl → Loc → Refl", &r.refl_loc_refl},
      {"Loc → Refl → Loc", &r.loc_refl_loc},
      {"Refl → IdemMonads → Refl", &r.monad_round_trip},
      {"induced monads lawful and idempotent", &r.monads_lawful},
      {"Refl ≅ Loc antitone", &r.loc_antitone},
      {"Refl^op ≅ IdemMonads order", &r.monad_order},
      {"natural equivalence is an equivalence relation", &r.equivalence_relation}};
  out.text = std::to_string(r.poset.structures.size()) + " reflective subcategories / localizations / monads\n";
  for (const auto& [name, v] : rows) {
    out.text += std::string(name) + ": " + verdict_text(*v) + "\n";
    out.report["checks"][name] = verdict_json(*v);
  }
  out.report["count"] = r.poset.structures.size();
  out.report["order_edges_checked"] = r.order_edges_checked;
  out.dot = poset_dot(c, r.poset, "localizations");
  out.status = r.holds() ? 0 : 1;
  return out;
}

Outcome colocalizations(const RunConfig& cfg) {
  const FinCat c = load(cfg);
  const LocalizationPoset via_op = colocalizations_via_op(c);
  const LocalizationPoset direct = enumerate_colocalizations(c);
  const Verdict same = same_poset(c, via_op, direct);
  Outcome out;
  out.report["via_opposite"] = poset_json(c, via_op);
  out.report["direct"] = poset_json(c, direct);
  out.report["hasse"] = hasse_json(direct);
  out.report["agree"] = verdict_json(same);
  out.text = std::to_string(via_op.structures.size()) + " colocalizations via the opposite category, " +
             std::to_string(direct.structures.size()) + " from coreflective subcategories\n";
  for (std::size_t i = 0; i < direct.structures.size(); ++i)
    out.text += "C" + std::to_string(i) + " " + braces(c.names(direct.subcategories[i].members)) +
                "  cof: " + braces(c.names(direct.structures[i].cof)) + "\n";
  out.text += "agreement: " + verdict_text(same) + "\n";
  out.dot = poset_dot(c, direct, "colocalizations");
  out.status = same.holds ? 0 : 1;
  return out;
}

FiniteRing load_ring(const std::string& path, std::size_t cap) { return io::parse_ring(io::load_json(path), cap); }

Outcome ring_check(const RunConfig& cfg) {
  const FiniteRing r = load_ring(require(cfg.ring, "--ring"), cfg.max_ring_size);
  const FiniteRing s = load_ring(require(cfg.algebra, "--algebra"), cfg.max_ring_size);
  json m = io::load_json(require(cfg.map, "--map"));
  if (m.is_object() && m.contains("map")) m = m.at("map");
  const RingHom phi = make_hom(r, s, io::parse_ring_map(r, s, m));
  const LocalizationReport rep = localization_exists_verdict(phi);
  std::vector<std::string> factors;
  for (const auto& f : rep.mult.factors) factors.push_back(f.str());
  Outcome out;
  out.report["tensor_order"] = rep.mult.tensor_order.str();
  out.report["ring_order"] = rep.mult.ring_order;
  out.report["invariant_factors"] = factors;
  out.report["multiplication_iso"] = verdict_json(rep.mult.verdict);
  out.report["multiplication_well_defined"] = verdict_json(rep.mult.well_defined);
  out.report["localization_exists"] = rep.exists;
  out.report["conclusion"] = rep.conclusion;
  out.text = "S ⊗_R S ≅ " + (factors.empty() ? std::string("0") : "Z/" + join(factors, " ⊕ Z/")) + "\n";
  out.text += "|S ⊗_R S| = " + rep.mult.tensor_order.str() + ", |S| = " + std::to_string(rep.mult.ring_order) + "\n";
  out.text += "multiplication map: " + verdict_text(rep.mult.verdict) + "\n" + rep.conclusion + "\n";
  out.status = rep.exists ? 0 : 1;
  return out;
}

std::pair<int, int> parse_truncated(const std::string& spec) {
  if (spec.find('=') == std::string::npos) {
    const json j = io::load_json(spec);
    if (!j.contains("p") || !j.contains("bound")) throw InputError("truncated spec needs p and bound");
    return {j.at("p").get<int>(), j.at("bound").get<int>()};
  }
  int p = 0, bound = -1;
  std::stringstream in(spec);
  std::string part;
  while (std::getline(in, part, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw InputError("expected key=value in \"" + part + "\"");
    const std::string key = part.substr(0, eq);
    int value = 0;
    try {
      value = std::stoi(part.substr(eq + 1));
    } catch (const std::exception&) {
      throw InputError("not a number in \"" + part + "\"");
    }
    if (key == "p") p = value;
    else if (key == "bound") bound = value;
    else throw InputError("unknown key \"" + key + "\"");
  }
  return {p, bound};
}

Outcome k0(const RunConfig& cfg) {
  WaldhausenData w;
  if (!cfg.truncated.empty()) {
    const auto [p, bound] = parse_truncated(cfg.truncated);
    if (cfg.weak != "isos" && cfg.weak != "all") throw InputError("--we must be isos or all");
    w = truncated_abelian(p, bound, cfg.weak == "all" ? WeakChoice::all : WeakChoice::isomorphisms, cfg.max_homs);
  } else {
    const FinCat c = load(cfg);
    const ObjectSet a = cfg.subcat.empty() ? c.all_objects() : parse_subcat(c, cfg.subcat);
    auto search = find_reflector(c, a);
    if (!search.reflector) throw HypothesisError("subcategory is not reflective: " + search.reason);
    w = waldhausen_from_localization(c, *search.reflector);
  }
  const K0Presentation p = k0_presentation(w);
  const K0Group g = k0_group(p);
  const Verdict mech = zero_map_mechanism(w, p);
  std::size_t cof_rows = 0, we_rows = 0;
  for (auto t : p.tags) (t == RelationTag::cofiber_sequence ? cof_rows : we_rows)++;
  std::vector<std::string> factors;
  for (const auto& f : g.factors) factors.push_back(f == 0 ? "Z" : "Z/" + f.str());
  Outcome out;
  out.report["generators"] = p.generator_labels;
  out.report["morphisms"] = w.morphisms.size();
  out.report["cofiber_relations"] = cof_rows;
  out.report["weak_equivalence_relations"] = we_rows;
  out.report["distinct_relations"] = g.distinct_relations;
  out.report["invariant_factors"] = factors;
  out.report["smith_check"] = verdict_json(g.smith_check);
  out.report["zero_map_mechanism"] = verdict_json(mech);
  out.report["finitely_bicomplete"] = w.bicomplete;
  if (!w.note.empty()) out.report["note"] = w.note;
  out.text = "generators: " + braces(p.generator_labels) + "\n";
  out.text += "relations: " + std::to_string(cof_rows) + " cofiber sequences, " + std::to_string(we_rows) +
              " weak equivalences (" + std::to_string(g.distinct_relations) + " distinct)\n";
  out.text += "K0 ≅ " + (factors.empty() ? std::string("0") : join(factors, " ⊕ ")) + "\n";
  out.text += "smith form: " + verdict_text(g.smith_check) + "\n";
  out.text += "zero-map relations: " + verdict_text(mech) + "\n";
  if (!w.note.empty()) out.text += "note: " + w.note + "\n";
  out.status = factors.empty() && g.smith_check.holds && mech.holds ? 0 : 1;
  return out;
}

}  // namespace

Outcome run_command(const RunConfig& cfg) {
  if (cfg.command == "validate") return validate(cfg);
  if (cfg.command == "limits") return limits(cfg);
  if (cfg.command == "enumerate-localizations") return enumerate(cfg);
  if (cfg.command == "verify-model") return verify_model(cfg);
  if (cfg.command == "homotopy-category") return homotopy(cfg);
  if (cfg.command == "monads") return monads(cfg);
  if (cfg.command == "bijections") return bijections(cfg);
  if (cfg.command == "colocalizations") return colocalizations(cfg);
  if (cfg.command == "ring-check") return ring_check(cfg);
  if (cfg.command == "k0") return k0(cfg);
  throw InputError("unknown command " + cfg.command);
}

}  // namespace discloc::cli
