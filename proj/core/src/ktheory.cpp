#include "discloc/ktheory.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "discloc/error.hpp"
#include "discloc/limits.hpp"

namespace discloc {

namespace {

int power(int p, int k) {
  int out = 1;
  for (int i = 0; i < k; ++i) out *= p;
  return out;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void partitions(int total, int largest, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(prefix);
    return;
  }
  for (int k = std::min(total, largest); k >= 1; --k) {
    prefix.push_back(k);
    partitions(total - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

WaldhausenData waldhausen_from_category(const FinCat& c, const MorphismClass& we) {
  if (we.universe() != c.morphism_count()) throw ShapeError("weak equivalences do not belong to the category");
  auto t = terminal_object(c);
  auto i = initial_object(c);
  std::optional<ObjId> zero;
  if (t && i) {
    if (*t == *i) zero = *t;
    else if (are_isomorphic(c, *t, *i)) zero = std::min(*t, *i);
  }
  if (!zero) throw HypothesisError("category has no zero object");
  WaldhausenData w;
  w.zero = *zero;
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    const ObjId o = static_cast<ObjId>(x);
    w.objects.push_back(c.object_name(o));
    int rep = o;
    for (std::size_t y = 0; y < x; ++y)
      if (are_isomorphic(c, static_cast<ObjId>(y), o)) {
        rep = static_cast<int>(y);
        break;
      }
    w.iso_class.push_back(rep);
  }
  for (std::size_t fi = 0; fi < c.morphism_count(); ++fi) {
    const MorId f = static_cast<MorId>(fi);
    w.morphisms.push_back({c.src(f), c.dst(f), c.morphism_name(f), {}});
    w.cofibration.push_back(true);
    w.weak.push_back(we.contains(f));
    const MorId to_zero = c.hom(c.src(f), w.zero).front();
    auto po = limit_search(c, LimitQuery::pushout(f, to_zero));
    if (!po.exists) throw HypothesisError("no cofiber for " + c.morphism_name(f));
    w.cofiber.push_back(po.cone->apex);
  }
  const auto b = is_finitely_bicomplete(c);
  w.bicomplete = b.holds;
  if (!b.holds) w.note = "category is not finitely bicomplete (missing " + b.missing_description + ")";
  return w;
}

WaldhausenData waldhausen_from_localization(const FinCat& c, const Reflector& r) {
  if (auto v = verify_reflector(c, r); !v) throw HypothesisError("not a reflector: " + v.check);
  return waldhausen_from_category(c, inverted_class(c, r));
}

std::vector<std::vector<int>> abelian_types(int p, int bound) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (bound < 0) throw InputError("bound must be non-negative");
  long long order = 1;
  for (int i = 0; i < bound; ++i) {
    order *= p;
    if (order > 64) throw InputError("p^bound exceeds 64");
  }
  std::vector<std::vector<int>> out;
  for (int total = 0; total <= bound; ++total) {
    std::vector<int> prefix;
    partitions(total, total, prefix, out);
  }
  return out;
}

std::size_t truncated_hom_count(int p, int bound) {
  const auto types = abelian_types(p, bound);
  std::size_t total = 0;
  for (const auto& a : types)
    for (const auto& b : types) {
      std::size_t n = 1;
      for (int x : a)
        for (int y : b) n *= static_cast<std::size_t>(power(p, std::min(x, y)));
      total += n;
    }
  return total;
}

std::string abelian_label(int p, const std::vector<int>& exponents) {
  if (exponents.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < exponents.size();) {
    std::size_t j = i;
    while (j < exponents.size() && exponents[j] == exponents[i]) ++j;
    std::string cyclic = "Z/" + std::to_string(power(p, exponents[i]));
    if (j - i > 1) cyclic = "(" + cyclic + ")^" + std::to_string(j - i);
    out += (out.empty() ? "" : "⊕") + cyclic;
    i = j;
  }
  return out;
}

std::vector<int> quotient_type(int p, const std::vector<int>& target,
                               const std::vector<std::vector<int>>& images) {
  const std::size_t k = target.size();
  if (k == 0) return {};
  IntMatrix rel(k + images.size(), k);
  for (std::size_t j = 0; j < k; ++j) rel(j, j) = power(p, target[j]);
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) rel(k + i, j) = images[i][j];
  const SmithForm s = smith_normal_form(rel);
  if (auto v = validate_smith(rel, s); !v) throw Error("smith form failed to validate: " + v.detail);
  std::vector<int> out;
  for (const auto& f : invariant_factors(s)) {
    if (f == 0) throw Error("quotient of a finite group is infinite");
    int e = 0;
    for (Integer x = f; x > 1; x /= p) ++e;
    out.push_back(e);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

WaldhausenData truncated_abelian(int p, int bound, WeakChoice we, std::size_t max_morphisms) {
  const auto types = abelian_types(p, bound);
  if (const auto n = truncated_hom_count(p, bound); n > max_morphisms)
    throw InputError("truncated category has " + std::to_string(n) + " morphisms, cap is " +
                     std::to_string(max_morphisms));
  std::map<std::vector<int>, int> index;
  WaldhausenData w;
  for (std::size_t i = 0; i < types.size(); ++i) {
    index[types[i]] = static_cast<int>(i);
    w.objects.push_back(abelian_label(p, types[i]));
    w.iso_class.push_back(static_cast<int>(i));
  }
  w.zero = 0;
  w.bicomplete = false;
  w.note = "truncated: products may exceed the bound; only cofibers are required";

  for (std::size_t a = 0; a < types.size(); ++a)
    for (std::size_t b = 0; b < types.size(); ++b) {
      const auto& ta = types[a];
      const auto& tb = types[b];
      // choices for each matrix cell (i, j): multiples of p^max(0, b_j - a_i) mod p^b_j
      std::vector<std::pair<int, int>> cells;  // (step, modulus)
      for (int x : ta)
        for (int y : tb) cells.emplace_back(power(p, std::max(0, y - x)), power(p, y));
      std::vector<int> pick(cells.size(), 0);
      for (;;) {
        WaldhausenMorphism f{static_cast<int>(a), static_cast<int>(b), {}, {}};
        f.matrix.assign(ta.size(), std::vector<int>(tb.size(), 0));
        for (std::size_t i = 0; i < ta.size(); ++i)
          for (std::size_t j = 0; j < tb.size(); ++j) {
            const std::size_t c = i * tb.size() + j;
            f.matrix[i][j] = pick[c] * cells[c].first;
          }
        std::string label;
        for (const auto& row : f.matrix) {
          std::string r;
          for (int v : row) r += (r.empty() ? "" : ",") + std::to_string(v);
          label += "[" + r + "]";
        }
        f.label = w.objects[a] + "→" + w.objects[b] + " " + (label.empty() ? "[]" : label);
        const auto q = quotient_type(p, tb, f.matrix);
        const int cof = index.at(q);
        const bool iso = a == b && q.empty();
        w.morphisms.push_back(std::move(f));
        w.cofibration.push_back(true);
        w.weak.push_back(we == WeakChoice::all || iso);
        w.cofiber.push_back(cof);
        std::size_t c = 0;
        for (; c < cells.size(); ++c) {
          if (++pick[c] < cells[c].second / cells[c].first) break;
          pick[c] = 0;
        }
        if (c == cells.size()) break;
      }
    }
  return w;
}

int cofiber(const WaldhausenData& w, std::size_t f) { return w.cofiber.at(f); }

K0Presentation k0_presentation(const WaldhausenData& w) {
  K0Presentation p;
  std::map<int, std::size_t> column;
  for (std::size_t x = 0; x < w.objects.size(); ++x)
    if (w.iso_class[x] == static_cast<int>(x)) {
      column[static_cast<int>(x)] = p.generators.size();
      p.generators.push_back(static_cast<int>(x));
      p.generator_labels.push_back(w.objects[x]);
    }
  auto col = [&](int obj) { return column.at(w.iso_class[static_cast<std::size_t>(obj)]); };

  std::vector<std::vector<Integer>> rows;
  for (std::size_t f = 0; f < w.morphisms.size(); ++f) {
    const auto& m = w.morphisms[f];
    if (w.cofibration[f]) {
      std::vector<Integer> r(p.generators.size());
      r[col(m.src)] += 1;
      r[col(w.cofiber[f])] += 1;
      r[col(m.dst)] -= 1;
      rows.push_back(std::move(r));
      p.tags.push_back(RelationTag::cofiber_sequence);
      p.sources.push_back(f);
    }
    if (w.weak[f]) {
      std::vector<Integer> r(p.generators.size());
      r[col(m.src)] += 1;
      r[col(m.dst)] -= 1;
      rows.push_back(std::move(r));
      p.tags.push_back(RelationTag::weak_equivalence);
      p.sources.push_back(f);
    }
  }
  p.relations = IntMatrix(rows.size(), p.generators.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < p.generators.size(); ++j) p.relations(i, j) = rows[i][j];
  return p;
}

K0Group k0_group(const K0Presentation& p) {
  const std::size_t n = p.relations.cols;
  std::set<std::vector<Integer>> distinct;
  for (std::size_t i = 0; i < p.relations.rows; ++i) {
    std::vector<Integer> r(n);
    bool zero = true;
    for (std::size_t j = 0; j < n; ++j) {
      r[j] = p.relations(i, j);
      zero = zero && r[j] == 0;
    }
    if (!zero) distinct.insert(std::move(r));
  }
  IntMatrix m(distinct.size(), n);
  std::size_t i = 0;
  for (const auto& r : distinct) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = r[j];
    ++i;
  }
  K0Group g;
  g.distinct_relations = distinct.size();
  const SmithForm s = smith_normal_form(m);
  g.smith_check = validate_smith(m, s);
  g.factors = invariant_factors(s);
  return g;
}

Verdict zero_map_mechanism(const WaldhausenData& w, const K0Presentation& p) {
  const std::size_t n = p.relations.cols;
  for (std::size_t g = 0; g < n; ++g) {
    bool found = false;
    for (std::size_t i = 0; i < p.relations.rows && !found; ++i) {
      if (p.tags[i] != RelationTag::cofiber_sequence) continue;
      const auto& m = w.morphisms[p.sources[i]];
      if (w.iso_class[static_cast<std::size_t>(m.src)] != p.generators[g]) continue;
      // f: A → B with cofiber B is the zero-map shape
      if (w.iso_class[static_cast<std::size_t>(w.cofiber[p.sources[i]])] !=
          w.iso_class[static_cast<std::size_t>(m.dst)])
        continue;
      bool unit = true;
      for (std::size_t j = 0; j < n; ++j) unit = unit && p.relations(i, j) == (j == g ? 1 : 0);
      found = unit;
    }
    if (!found)
      return Verdict::fail("zero-map relation", "no relation [A] = 0 induced by a zero map",
                           {p.generator_labels[g]});
  }
  return Verdict::pass();
}

}  // namespace discloc
