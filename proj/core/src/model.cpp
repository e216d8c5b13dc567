#include "discloc/model.hpp"

#include "discloc/error.hpp"
#include "discloc/lifting.hpp"
#include "discloc/limits.hpp"

namespace discloc {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::given: return "given";
    case Provenance::discrete: return "discrete";
    case Provenance::localization: return "localization";
    case Provenance::colocalization: return "colocalization";
  }
  return "?";
}

bool same_classes(const ModelStructure& a, const ModelStructure& b) {
  return a.cof == b.cof && a.we == b.we && a.fib == b.fib;
}

namespace {

void require_bicomplete(const FinCat& c) {
  auto r = is_finitely_bicomplete(c);
  if (!r.holds)
    throw HypothesisError("category is not finitely bicomplete: missing " + r.missing_description);
}

void require_well_complete(const FinCat& c, std::string_view what) {
  auto r = is_finitely_well_complete(c);
  if (!r.holds)
    throw HypothesisError(std::string(what) + " is not finitely well-complete: " + r.failure);
}

void check_classes(const FinCat& c, const ModelStructure& m) {
  const auto n = c.morphism_count();
  if (m.cof.universe() != n || m.we.universe() != n || m.fib.universe() != n)
    throw ShapeError("model structure classes do not belong to the category");
}

ModelStructure localize(const FinCat& c, const Reflector& r) {
  ModelStructure m;
  m.cof = c.all_morphisms();
  m.we = inverted_class(c, r);
  m.fib = rlp_class(c, m.we);
  m.provenance = Provenance::localization;
  m.subcategory = r.members;
  return m;
}

ModelStructure colocalize(const FinCat& c, const Reflector& r) {
  ModelStructure m;
  m.fib = c.all_morphisms();
  m.we = inverted_class(c, r);
  m.cof = llp_class(c, m.we);
  m.provenance = Provenance::colocalization;
  m.subcategory = r.members;
  return m;
}

struct Split {
  MorId section;
  MorId retraction;
};

class RetractFinder {
 public:
  explicit RetractFinder(const FinCat& c) : c_(c), cache_(c.object_count() * c.object_count()) {}

  /// (i, r, i', r') exhibiting f as a retract of g in the arrow category.
  std::optional<std::vector<MorId>> witness(MorId f, MorId g) {
    const auto& top = splits(c_.src(f), c_.src(g));
    if (top.empty()) return std::nullopt;
    const auto& bottom = splits(c_.dst(f), c_.dst(g));
    for (const auto& s : top)
      for (const auto& t : bottom)
        if (c_.compose(g, s.section) == c_.compose(t.section, f) &&
            c_.compose(f, s.retraction) == c_.compose(t.retraction, g))
          return std::vector<MorId>{s.section, s.retraction, t.section, t.retraction};
    return std::nullopt;
  }

 private:
  const std::vector<Split>& splits(ObjId x, ObjId a) {
    auto& slot = cache_[static_cast<std::size_t>(x) * c_.object_count() + static_cast<std::size_t>(a)];
    if (!slot) {
      slot.emplace();
      for (MorId s : c_.hom(x, a))
        for (MorId r : c_.hom(a, x))
          if (c_.compose(r, s) == c_.identity(x)) slot->push_back({s, r});
    }
    return *slot;
  }

  const FinCat& c_;
  std::vector<std::optional<std::vector<Split>>> cache_;
};

Verdict retract_closed(const FinCat& c, RetractFinder& finder, const MorphismClass& k,
                       std::string_view name) {
  const auto members = k.members();
  for (std::size_t fi = 0; fi < c.morphism_count(); ++fi) {
    const MorId f = static_cast<MorId>(fi);
    if (k.contains(f)) continue;
    for (MorId g : members)
      if (auto w = finder.witness(f, g)) {
        std::vector<std::string> names{c.morphism_name(f), c.morphism_name(g)};
        for (MorId m : *w) names.push_back(c.morphism_name(m));
        return Verdict::fail("retract closure (" + std::string(name) + ")",
                             "a retract of a member is not a member", names);
      }
  }
  return Verdict::pass();
}

Verdict lifting_characterization(const FinCat& c, const MorphismClass& expected,
                                 const MorphismClass& against, std::string check) {
  for (std::size_t fi = 0; fi < c.morphism_count(); ++fi) {
    const MorId f = static_cast<MorId>(fi);
    auto failure = llp_failure(c, against, f);
    if (expected.contains(f) && failure) {
      auto w = square_names(c, *failure);
      w.insert(w.begin(), c.morphism_name(f));
      return Verdict::fail(check, "member has no lift in a square", w);
    }
    if (!expected.contains(f) && !failure)
      return Verdict::fail(check, "non-member has the left lifting property",
                           {c.morphism_name(f)});
  }
  return Verdict::pass();
}

std::optional<std::pair<MorId, MorId>> factor_through(const FinCat& c, MorId f,
                                                      const MorphismClass& left,
                                                      const MorphismClass& right) {
  for (std::size_t z = 0; z < c.object_count(); ++z)
    for (MorId i : c.hom(c.src(f), static_cast<ObjId>(z))) {
      if (!left.contains(i)) continue;
      for (MorId p : c.hom(static_cast<ObjId>(z), c.dst(f)))
        if (right.contains(p) && c.compose(p, i) == f) return std::pair{i, p};
    }
  return std::nullopt;
}

}  // namespace

ModelStructure discrete_structure(const FinCat& c) {
  require_bicomplete(c);
  ModelStructure m;
  m.cof = c.all_morphisms();
  m.fib = c.all_morphisms();
  m.we = isomorphisms(c);
  m.provenance = Provenance::discrete;
  m.subcategory = c.all_objects();
  return m;
}

ModelStructure localization_from_reflector(const FinCat& c, const Reflector& r) {
  require_bicomplete(c);
  require_well_complete(c, "category");
  if (auto v = verify_reflector(c, r); !v)
    throw HypothesisError("not a reflector: " + v.check + " (" + v.detail + ")");
  return localize(c, r);
}

ModelStructure colocalization_from_coreflector(const FinCat& c, const Reflector& r) {
  require_bicomplete(c);
  require_well_complete(opposite(c), "opposite category");
  if (auto v = verify_coreflector(c, r); !v)
    throw HypothesisError("not a coreflector: " + v.check + " (" + v.detail + ")");
  return colocalize(c, r);
}

Verdict verify_model_axioms(const FinCat& c, const ModelStructure& m) {
  check_classes(c, m);
  if (auto b = is_finitely_bicomplete(c); !b.holds)
    return Verdict::fail("finitely bicomplete", "missing " + b.missing_description);

  RetractFinder finder(c);
  if (auto v = retract_closed(c, finder, m.cof, "cofibrations"); !v) return v;
  if (auto v = retract_closed(c, finder, m.we, "weak equivalences"); !v) return v;
  if (auto v = retract_closed(c, finder, m.fib, "fibrations"); !v) return v;

  const auto n = static_cast<MorId>(c.morphism_count());
  for (MorId g = 0; g < n; ++g)
    for (MorId f = 0; f < n; ++f) {
      if (!c.composable(g, f)) continue;
      const MorId gf = c.compose(g, f);
      const int count = int{m.we.contains(f)} + int{m.we.contains(g)} + int{m.we.contains(gf)};
      if (count == 2)
        return Verdict::fail("two-out-of-three", "two of f, g, g∘f are weak equivalences",
                             {c.morphism_name(g), c.morphism_name(f), c.morphism_name(gf)});
    }

  const MorphismClass acyclic_fib = m.we & m.fib;
  const MorphismClass acyclic_cof = m.cof & m.we;
  if (auto v = lifting_characterization(c, m.cof, acyclic_fib,
                                        "cofibrations = llp(acyclic fibrations)");
      !v)
    return v;
  if (auto v = lifting_characterization(c, acyclic_cof, m.fib,
                                        "acyclic cofibrations = llp(fibrations)");
      !v)
    return v;

  for (MorId f = 0; f < n; ++f)
    if (!factor_through(c, f, acyclic_cof, m.fib))
      return Verdict::fail("factorization (acyclic cofibration, fibration)",
                           "no factorization exists", {c.morphism_name(f)});
  for (MorId f = 0; f < n; ++f)
    if (!factor_through(c, f, m.cof, acyclic_fib))
      return Verdict::fail("factorization (cofibration, acyclic fibration)",
                           "no factorization exists", {c.morphism_name(f)});
  return Verdict::pass();
}

ObjectSet fibrant_objects(const FinCat& c, const ModelStructure& m) {
  check_classes(c, m);
  auto t = terminal_object(c);
  if (!t) throw HypothesisError("no terminal object");
  ObjectSet out(c.object_count());
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    const auto& maps = c.hom(static_cast<ObjId>(x), *t);
    if (maps.size() == 1 && m.fib.contains(maps.front())) out.insert(static_cast<int>(x));
  }
  return out;
}

ObjectSet cofibrant_objects(const FinCat& c, const ModelStructure& m) {
  check_classes(c, m);
  auto i = initial_object(c);
  if (!i) throw HypothesisError("no initial object");
  ObjectSet out(c.object_count());
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    const auto& maps = c.hom(*i, static_cast<ObjId>(x));
    if (maps.size() == 1 && m.cof.contains(maps.front())) out.insert(static_cast<int>(x));
  }
  return out;
}

std::optional<Replacement> replace_object(const FinCat& c, const ModelStructure& m, ObjId x) {
  const ObjectSet fibrant = fibrant_objects(c, m);
  for (int p : fibrant.members())
    for (MorId i : c.hom(x, p))
      if (m.cof.contains(i) && m.we.contains(i)) return Replacement{p, i};
  return std::nullopt;
}

FibrantReplacement fibrant_replacement(const FinCat& c, const ModelStructure& m) {
  check_classes(c, m);
  const ObjectSet fibrant = fibrant_objects(c, m);
  FibrantReplacement out;
  const std::size_t n = c.object_count();
  out.functor.on_objects.assign(n, -1);
  out.unit.components.assign(n, kNoMorphism);
  for (std::size_t xi = 0; xi < n; ++xi) {
    const ObjId x = static_cast<ObjId>(xi);
    for (int p : fibrant.members()) {
      for (MorId i : c.hom(x, p))
        if (m.cof.contains(i) && m.we.contains(i)) {
          out.functor.on_objects[xi] = p;
          out.unit.components[xi] = i;
          break;
        }
      if (out.unit.components[xi] != kNoMorphism) break;
    }
    if (out.unit.components[xi] == kNoMorphism) {
      out.certificate = Verdict::fail("replacement exists",
                                      "no acyclic cofibration into a fibrant object",
                                      {c.object_name(x)});
      return out;
    }
  }

  out.functor.on_morphisms.assign(c.morphism_count(), kNoMorphism);
  for (std::size_t fi = 0; fi < c.morphism_count(); ++fi) {
    const MorId f = static_cast<MorId>(fi);
    const ObjId x = c.src(f), y = c.dst(f);
    const MorId target = c.compose(out.unit[y], f);
    std::size_t fillers = 0;
    for (MorId g : c.hom(out.functor(x), out.functor(y)))
      if (c.compose(g, out.unit[x]) == target) {
        if (fillers++ == 0) out.functor.on_morphisms[fi] = g;
      }
    ++out.diagrams_checked;
    if (fillers != 1) {
      out.certificate = Verdict::fail("unique filler",
                                      std::to_string(fillers) + " fillers in the replacement diagram",
                                      {c.morphism_name(f)});
      return out;
    }
  }

  if (auto v = verify_functor(c, c, out.functor); !v) {
    out.certificate = v;
    return out;
  }

  for (std::size_t xi = 0; xi < n; ++xi) {
    const ObjId x = static_cast<ObjId>(xi);
    for (int b : fibrant.members()) {
      ++out.adjunction_pairs_checked;
      const auto& from = c.hom(out.functor(x), b);
      const auto& to = c.hom(x, b);
      std::vector<bool> hit(c.morphism_count(), false);
      bool injective = true;
      for (MorId k : from) {
        const MorId h = c.compose(k, out.unit[x]);
        if (hit[static_cast<std::size_t>(h)]) injective = false;
        hit[static_cast<std::size_t>(h)] = true;
      }
      bool surjective = true;
      for (MorId h : to) surjective = surjective && hit[static_cast<std::size_t>(h)];
      if (!injective || !surjective) {
        out.certificate = Verdict::fail("adjunction", "hom(PX, B) → hom(X, B) is not a bijection",
                                        {c.object_name(x), c.object_name(b)});
        return out;
      }
    }
  }
  out.certificate = Verdict::pass();
  return out;
}

namespace {

class HomotopySearch {
 public:
  HomotopySearch(const FinCat& c, const ModelStructure& m)
      : c_(c), m_(m), coproducts_(c.object_count()), products_(c.object_count()) {}

  bool left(MorId f, MorId g) {
    const ObjId a = c_.src(f), b = c_.dst(f);
    const Cone& sum = coproduct(a);
    const MorId in1 = sum.legs[0], in2 = sum.legs[1];
    const MorId id_a = c_.identity(a);
    for (std::size_t z = 0; z < c_.object_count(); ++z) {
      const ObjId cyl = static_cast<ObjId>(z);
      for (MorId i : c_.hom(sum.apex, cyl)) {
        if (!m_.cof.contains(i)) continue;
        const MorId i1 = c_.compose(i, in1), i2 = c_.compose(i, in2);
        bool cylinder = false;
        for (MorId j : c_.hom(cyl, a))
          if (m_.we.contains(j) && c_.compose(j, i1) == id_a && c_.compose(j, i2) == id_a) {
            cylinder = true;
            break;
          }
        if (!cylinder) continue;
        for (MorId h : c_.hom(cyl, b))
          if (c_.compose(h, i1) == f && c_.compose(h, i2) == g) return true;
      }
    }
    return false;
  }

  bool right(MorId f, MorId g) {
    const ObjId a = c_.src(f), b = c_.dst(f);
    const Cone& prod = product(b);
    const MorId pr1 = prod.legs[0], pr2 = prod.legs[1];
    const MorId id_b = c_.identity(b);
    for (std::size_t z = 0; z < c_.object_count(); ++z) {
      const ObjId path = static_cast<ObjId>(z);
      for (MorId p : c_.hom(path, prod.apex)) {
        if (!m_.fib.contains(p)) continue;
        const MorId p1 = c_.compose(pr1, p), p2 = c_.compose(pr2, p);
        bool path_object = false;
        for (MorId s : c_.hom(b, path))
          if (m_.we.contains(s) && c_.compose(p1, s) == id_b && c_.compose(p2, s) == id_b) {
            path_object = true;
            break;
          }
        if (!path_object) continue;
        for (MorId k : c_.hom(a, path))
          if (c_.compose(p1, k) == f && c_.compose(p2, k) == g) return true;
      }
    }
    return false;
  }

 private:
  const Cone& coproduct(ObjId a) {
    auto& slot = coproducts_[static_cast<std::size_t>(a)];
    if (!slot) {
      auto r = limit_search(c_, LimitQuery::coproduct(a, a));
      if (!r.exists) throw HypothesisError("no coproduct " + c_.object_name(a) + " ⊔ " + c_.object_name(a));
      slot = *r.cone;
    }
    return *slot;
  }

  const Cone& product(ObjId b) {
    auto& slot = products_[static_cast<std::size_t>(b)];
    if (!slot) {
      auto r = limit_search(c_, LimitQuery::product(b, b));
      if (!r.exists) throw HypothesisError("no product " + c_.object_name(b) + " × " + c_.object_name(b));
      slot = *r.cone;
    }
    return *slot;
  }

  const FinCat& c_;
  const ModelStructure& m_;
  std::vector<std::optional<Cone>> coproducts_;
  std::vector<std::optional<Cone>> products_;
};

}  // namespace

HomotopyRelation homotopy_relations(const FinCat& c, const ModelStructure& m, MorId f, MorId g) {
  check_classes(c, m);
  if (c.src(f) != c.src(g) || c.dst(f) != c.dst(g))
    throw InputError("homotopy needs parallel morphisms");
  HomotopySearch search(c, m);
  return {search.left(f, g), search.right(f, g)};
}

Verdict homotopy_rigidity(const FinCat& c, const ModelStructure& m) {
  const ObjectSet fibrant = fibrant_objects(c, m);
  HomotopySearch search(c, m);
  for (int b : fibrant.members())
    for (std::size_t a = 0; a < c.object_count(); ++a) {
      const auto& maps = c.hom(static_cast<ObjId>(a), b);
      for (MorId f : maps)
        for (MorId g : maps) {
          const bool l = search.left(f, g), r = search.right(f, g);
          if (l != (f == g) || r != (f == g))
            return Verdict::fail("homotopy rigidity",
                                 "homotopy relation differs from equality into a fibrant object",
                                 {c.morphism_name(f), c.morphism_name(g)});
        }
    }
  return Verdict::pass();
}

HomotopyCategoryView homotopy_category(const FinCat& c, const ModelStructure& m) {
  HomotopyCategoryView view{fibrant_objects(c, m), {}, {}, {}};
  view.category = full_subcategory(c, view.fibrant);
  const FibrantReplacement fr = fibrant_replacement(c, m);
  view.replacement = fr.functor;
  if (!fr.certificate) {
    view.certificate = fr.certificate;
    return view;
  }
  for (std::size_t fi = 0; fi < c.morphism_count(); ++fi) {
    const MorId f = static_cast<MorId>(fi);
    if (is_iso(c, fr.functor.map(f)) != m.we.contains(f)) {
      view.certificate = Verdict::fail("replacement inverts exactly the weak equivalences",
                                       "P(f) iso differs from f ∈ we", {c.morphism_name(f)});
      return view;
    }
  }
  for (std::size_t xi = 0; xi < c.object_count(); ++xi) {
    const ObjId x = static_cast<ObjId>(xi);
    if (!m.we.contains(fr.unit[x]) || !view.fibrant.contains(fr.functor(x))) {
      view.certificate = Verdict::fail("essentially surjective",
                                       "object is not weakly equivalent to its replacement",
                                       {c.object_name(x)});
      return view;
    }
  }
  HomotopySearch search(c, m);
  for (int a : view.fibrant.members())
    for (int b : view.fibrant.members()) {
      const auto& maps = c.hom(a, b);
      std::vector<bool> hit(c.morphism_count(), false);
      for (MorId h : maps) {
        const MorId ph = fr.functor.map(h);
        if (hit[static_cast<std::size_t>(ph)]) {
          view.certificate = Verdict::fail("faithful", "P identifies two maps between fibrants",
                                           {c.morphism_name(h)});
          return view;
        }
        hit[static_cast<std::size_t>(ph)] = true;
      }
      for (MorId k : c.hom(fr.functor(a), fr.functor(b)))
        if (!hit[static_cast<std::size_t>(k)]) {
          view.certificate = Verdict::fail("full", "map between replacements is not hit",
                                           {c.object_name(a), c.object_name(b), c.morphism_name(k)});
          return view;
        }
      for (MorId f : maps)
        for (MorId g : maps) {
          const bool related = search.left(f, g) || search.right(f, g);
          if (related != (f == g)) {
            view.certificate = Verdict::fail("homotopy classes are singletons",
                                             f == g ? "map is not homotopic to itself"
                                                    : "distinct maps between fibrants are homotopic",
                                             {c.morphism_name(f), c.morphism_name(g)});
            return view;
          }
        }
    }
  view.certificate = Verdict::pass();
  return view;
}

Reflector reflector_of(const FinCat& c, const ModelStructure& m) {
  const FibrantReplacement fr = fibrant_replacement(c, m);
  if (!fr.certificate)
    throw HypothesisError("fibrant replacement failed: " + fr.certificate.check);
  return {fibrant_objects(c, m), fr.functor, fr.unit};
}

Verdict maps_between_fibrants_are_fibrations(const FinCat& c, const ModelStructure& m) {
  const ObjectSet fibrant = fibrant_objects(c, m);
  for (std::size_t fi = 0; fi < c.morphism_count(); ++fi) {
    const MorId f = static_cast<MorId>(fi);
    if (fibrant.contains(c.src(f)) && fibrant.contains(c.dst(f)) && !m.fib.contains(f))
      return Verdict::fail("maps between fibrant objects are fibrations",
                           "map between fibrant objects is not a fibration", {c.morphism_name(f)});
  }
  return Verdict::pass();
}

namespace {

void order(LocalizationPoset& p, const FinCat& c) {
  const std::size_t k = p.structures.size();
  p.leq.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      p.leq[i][j] = p.structures[i].cof == p.structures[j].cof &&
                    p.structures[i].fib.universe() == p.structures[j].fib.universe() &&
                    p.structures[i].we.is_subset_of(p.structures[j].we);
  p.order_reversal = Verdict::pass();
  for (std::size_t i = 0; i < k && p.order_reversal; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const bool included = p.subcategories[i].members.is_subset_of(p.subcategories[j].members);
      if (included != p.leq[j][i]) {
        auto wi = c.names(p.subcategories[i].members);
        auto wj = c.names(p.subcategories[j].members);
        std::string a, b;
        for (auto& s : wi) a += (a.empty() ? "" : ",") + s;
        for (auto& s : wj) b += (b.empty() ? "" : ",") + s;
        p.order_reversal = Verdict::fail("order reversal",
                                         "inclusion of subcategories does not match the reversed "
                                         "structure order",
                                         {"{" + a + "}", "{" + b + "}"});
        break;
      }
    }
  p.distinct = Verdict::pass();
  for (std::size_t i = 0; i < k && p.distinct; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (same_classes(p.structures[i], p.structures[j])) {
        p.distinct = Verdict::fail("distinct", "two subcategories give the same structure",
                                   {std::to_string(i), std::to_string(j)});
        break;
      }
}

}  // namespace

LocalizationPoset enumerate_localizations(const FinCat& c) {
  require_bicomplete(c);
  require_well_complete(c, "category");
  LocalizationPoset p;
  p.subcategories = enumerate_replete_reflective(c);
  for (const auto& r : p.subcategories) p.structures.push_back(localize(c, r));
  order(p, c);
  return p;
}

LocalizationPoset colocalizations_via_op(const FinCat& c) {
  const FinCat op = opposite(c);
  LocalizationPoset p = enumerate_localizations(op);
  for (auto& m : p.structures) {
    std::swap(m.cof, m.fib);
    m.provenance = Provenance::colocalization;
  }
  order(p, c);
  return p;
}

LocalizationPoset enumerate_colocalizations(const FinCat& c) {
  require_bicomplete(c);
  require_well_complete(opposite(c), "opposite category");
  LocalizationPoset p;
  p.subcategories = enumerate_replete_coreflective(c);
  for (const auto& r : p.subcategories) p.structures.push_back(colocalize(c, r));
  order(p, c);
  return p;
}

Verdict same_poset(const FinCat& c, const LocalizationPoset& a, const LocalizationPoset& b) {
  if (a.structures.size() != b.structures.size())
    return Verdict::fail("same poset", "different numbers of structures",
                         {std::to_string(a.structures.size()), std::to_string(b.structures.size())});
  for (std::size_t i = 0; i < a.structures.size(); ++i) {
    if (a.subcategories[i].members != b.subcategories[i].members || !same_classes(a.structures[i], b.structures[i])) {
      std::string m;
      for (const auto& n : c.names(a.subcategories[i].members)) m += (m.empty() ? "" : ",") + n;
      return Verdict::fail("same poset", "structures differ at a position", {std::to_string(i), "{" + m + "}"});
    }
  }
  if (a.leq != b.leq) return Verdict::fail("same poset", "orders differ");
  return Verdict::pass();
}

}  // namespace discloc
