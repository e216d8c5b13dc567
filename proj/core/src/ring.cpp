#include "discloc/ring.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "discloc/error.hpp"

namespace discloc {

int FiniteRing::negate(int a) const {
  for (std::size_t b = 0; b < size(); ++b)
    if (plus(a, static_cast<int>(b)) == zero) return static_cast<int>(b);
  throw InputError("element " + labels[static_cast<std::size_t>(a)] + " has no additive inverse");
}

int FiniteRing::integer(std::int64_t k) const {
  const std::int64_t c = characteristic();
  k %= c;
  if (k < 0) k += c;
  int out = zero;
  for (std::int64_t i = 0; i < k; ++i) out = plus(out, one);
  return out;
}

std::optional<int> FiniteRing::find(const std::string& label) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

std::int64_t FiniteRing::characteristic() const {
  std::int64_t k = 1;
  for (int x = one; x != zero; x = plus(x, one)) ++k;
  return k;
}

Verdict validate_ring(const FiniteRing& r) {
  const std::size_t n = r.size();
  if (n == 0) return Verdict::fail("carrier", "empty carrier");
  if (r.add.size() != n * n || r.mul.size() != n * n)
    return Verdict::fail("tables", "operation tables must be |R|×|R|");
  auto in_range = [n](int x) { return x >= 0 && static_cast<std::size_t>(x) < n; };
  if (!in_range(r.zero) || !in_range(r.one)) return Verdict::fail("constants", "0 or 1 out of range");
  for (std::size_t i = 0; i < n * n; ++i)
    if (!in_range(r.add[i]) || !in_range(r.mul[i]))
      return Verdict::fail("tables", "table entry out of range");
  std::map<std::string, int> seen;
  for (std::size_t i = 0; i < n; ++i)
    if (!seen.emplace(r.labels[i], 0).second)
      return Verdict::fail("carrier", "duplicate element label", {r.labels[i]});

  const int m = static_cast<int>(n);
  auto l = [&](int x) { return r.labels[static_cast<std::size_t>(x)]; };
  for (int a = 0; a < m; ++a) {
    if (r.plus(a, r.zero) != a) return Verdict::fail("additive identity", "a + 0 != a", {l(a)});
    if (r.times(a, r.one) != a) return Verdict::fail("multiplicative identity", "a · 1 != a", {l(a)});
    bool inverse = false;
    for (int b = 0; b < m && !inverse; ++b) inverse = r.plus(a, b) == r.zero;
    if (!inverse) return Verdict::fail("additive inverse", "no b with a + b = 0", {l(a)});
    for (int b = 0; b < m; ++b) {
      if (r.plus(a, b) != r.plus(b, a))
        return Verdict::fail("additive commutativity", "a + b != b + a", {l(a), l(b)});
      if (r.times(a, b) != r.times(b, a))
        return Verdict::fail("multiplicative commutativity", "a · b != b · a", {l(a), l(b)});
    }
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        if (r.plus(r.plus(a, b), c) != r.plus(a, r.plus(b, c)))
          return Verdict::fail("additive associativity", "(a + b) + c != a + (b + c)", {l(a), l(b), l(c)});
        if (r.times(r.times(a, b), c) != r.times(a, r.times(b, c)))
          return Verdict::fail("multiplicative associativity", "(a · b) · c != a · (b · c)",
                               {l(a), l(b), l(c)});
        if (r.times(a, r.plus(b, c)) != r.plus(r.times(a, b), r.times(a, c)))
          return Verdict::fail("distributivity", "a · (b + c) != a · b + a · c", {l(a), l(b), l(c)});
      }
  return Verdict::pass();
}

FiniteRing make_ring(FiniteRing r, std::size_t max_size) {
  if (r.size() > max_size)
    throw InputError("ring has " + std::to_string(r.size()) + " elements, cap is " +
                     std::to_string(max_size));
  if (auto v = validate_ring(r); !v) {
    std::string w;
    for (const auto& s : v.witness) w += (w.empty() ? "" : ", ") + s;
    throw InputError("not a commutative ring: " + v.check + " fails" + (w.empty() ? "" : " at " + w));
  }
  return r;
}

FiniteRing zn(int n, std::size_t max_size) {
  if (n < 1) throw InputError("Z/n needs n ≥ 1");
  if (static_cast<std::size_t>(n) > max_size)
    throw InputError("Z/" + std::to_string(n) + " exceeds the ring size cap");
  FiniteRing r;
  const std::size_t k = static_cast<std::size_t>(n);
  r.add.resize(k * k);
  r.mul.resize(k * k);
  for (int a = 0; a < n; ++a) {
    r.labels.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) {
      r.add[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
      r.mul[static_cast<std::size_t>(a * n + b)] = (a * b) % n;
    }
  }
  r.zero = 0;
  r.one = 1 % n;
  return make_ring(std::move(r), max_size);
}

FiniteRing product(const std::vector<FiniteRing>& factors, std::size_t max_size) {
  if (factors.empty()) throw InputError("product needs at least one factor");
  std::size_t n = 1;
  for (const auto& f : factors) {
    n *= f.size();
    if (n > max_size) throw InputError("product ring exceeds the ring size cap");
  }
  // mixed radix, first factor most significant
  auto digits = [&](std::size_t x) {
    std::vector<int> d(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      d[i] = static_cast<int>(x % factors[i].size());
      x /= factors[i].size();
    }
    return d;
  };
  auto index = [&](const std::vector<int>& d) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) x = x * factors[i].size() + static_cast<std::size_t>(d[i]);
    return static_cast<int>(x);
  };
  FiniteRing r;
  r.add.resize(n * n);
  r.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto da = digits(a);
    std::string label = "(";
    for (std::size_t i = 0; i < factors.size(); ++i)
      label += (i ? "," : "") + factors[i].labels[static_cast<std::size_t>(da[i])];
    r.labels.push_back(label + ")");
    for (std::size_t b = 0; b < n; ++b) {
      const auto db = digits(b);
      std::vector<int> s(factors.size()), p(factors.size());
      for (std::size_t i = 0; i < factors.size(); ++i) {
        s[i] = factors[i].plus(da[i], db[i]);
        p[i] = factors[i].times(da[i], db[i]);
      }
      r.add[a * n + b] = index(s);
      r.mul[a * n + b] = index(p);
    }
  }
  std::vector<int> z, o;
  for (const auto& f : factors) {
    z.push_back(f.zero);
    o.push_back(f.one);
  }
  r.zero = index(z);
  r.one = index(o);
  return make_ring(std::move(r), max_size);
}

FiniteRing polyquo(const FiniteRing& base, const std::vector<int>& poly, std::size_t max_size) {
  if (poly.size() < 2) throw InputError("modulus must have degree at least 1");
  for (int c : poly)
    if (c < 0 || static_cast<std::size_t>(c) >= base.size())
      throw InputError("modulus coefficient is not an element of the base ring");
  if (poly.back() != base.one) throw InputError("modulus is not monic");
  const std::size_t d = poly.size() - 1;
  const std::size_t m = base.size();
  std::size_t n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    n *= m;
    if (n > max_size) throw InputError("quotient ring exceeds the ring size cap");
  }
  auto coeffs = [&](std::size_t x) {
    std::vector<int> c(d);
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = static_cast<int>(x % m);
      x /= m;
    }
    return c;
  };
  auto index = [&](const std::vector<int>& c) {
    std::size_t x = 0;
    for (std::size_t i = d; i-- > 0;) x = x * m + static_cast<std::size_t>(c[i]);
    return static_cast<int>(x);
  };
  auto label = [&](const std::vector<int>& c) {
    std::string out;
    for (std::size_t i = 0; i < d; ++i) {
      if (c[i] == base.zero) continue;
      std::string term;
      const std::string& coef = base.labels[static_cast<std::size_t>(c[i])];
      if (i == 0) term = coef;
      else {
        term = c[i] == base.one ? "" : coef;
        term += i == 1 ? "x" : "x^" + std::to_string(i);
      }
      out += (out.empty() ? "" : "+") + term;
    }
    return out.empty() ? base.labels[static_cast<std::size_t>(base.zero)] : out;
  };
  FiniteRing r;
  r.add.resize(n * n);
  r.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto ca = coeffs(a);
    r.labels.push_back(label(ca));
    for (std::size_t b = 0; b < n; ++b) {
      const auto cb = coeffs(b);
      std::vector<int> s(d);
      for (std::size_t i = 0; i < d; ++i) s[i] = base.plus(ca[i], cb[i]);
      r.add[a * n + b] = index(s);
      std::vector<int> p(2 * d - 1, base.zero);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) p[i + j] = base.plus(p[i + j], base.times(ca[i], cb[j]));
      for (std::size_t k = p.size(); k-- > d;) {
        const int c = p[k];
        if (c == base.zero) continue;
        for (std::size_t i = 0; i <= d; ++i)
          p[k - d + i] = base.plus(p[k - d + i], base.negate(base.times(c, poly[i])));
      }
      p.resize(d);
      r.mul[a * n + b] = index(p);
    }
  }
  std::vector<int> z(d, base.zero), o(d, base.zero);
  o[0] = base.one;
  r.zero = index(z);
  r.one = index(o);
  return make_ring(std::move(r), max_size);
}

Verdict validate_hom(const RingHom& phi) {
  const auto& s = phi.domain;
  const auto& t = phi.codomain;
  if (phi.map.size() != s.size()) return Verdict::fail("map", "element map does not cover the domain");
  for (int x : phi.map)
    if (x < 0 || static_cast<std::size_t>(x) >= t.size())
      return Verdict::fail("map", "image outside the codomain");
  if (phi(s.zero) != t.zero) return Verdict::fail("preserves 0", "φ(0) != 0");
  if (phi(s.one) != t.one) return Verdict::fail("preserves 1", "φ(1) != 1");
  const int n = static_cast<int>(s.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const std::vector<std::string> w{s.labels[static_cast<std::size_t>(a)], s.labels[static_cast<std::size_t>(b)]};
      if (phi(s.plus(a, b)) != t.plus(phi(a), phi(b)))
        return Verdict::fail("preserves +", "φ(a + b) != φ(a) + φ(b)", w);
      if (phi(s.times(a, b)) != t.times(phi(a), phi(b)))
        return Verdict::fail("preserves ×", "φ(a · b) != φ(a) · φ(b)", w);
    }
  return Verdict::pass();
}

RingHom make_hom(FiniteRing domain, FiniteRing codomain, std::vector<int> map) {
  RingHom phi{std::move(domain), std::move(codomain), std::move(map)};
  if (auto v = validate_hom(phi); !v) {
    std::string w;
    for (const auto& s : v.witness) w += (w.empty() ? "" : ", ") + s;
    throw InputError("not a ring map: " + v.check + " fails" + (w.empty() ? "" : " at " + w));
  }
  return phi;
}

RingHom identity_hom(const FiniteRing& r) {
  std::vector<int> map(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) map[i] = static_cast<int>(i);
  return {r, r, std::move(map)};
}

std::vector<std::vector<int>> ring_homs(const FiniteRing& s, const FiniteRing& t) {
  const int n = static_cast<int>(s.size());
  std::vector<std::vector<int>> out;
  std::vector<int> map(s.size(), -1);

  // assign x ↦ y and close under + and ×; false on a clash
  std::function<bool(std::vector<int>&, int, int)> assign = [&](std::vector<int>& m, int x, int y) {
    std::vector<std::pair<int, int>> queue{{x, y}};
    while (!queue.empty()) {
      auto [a, v] = queue.back();
      queue.pop_back();
      int& slot = m[static_cast<std::size_t>(a)];
      if (slot == v) continue;
      if (slot != -1) return false;
      slot = v;
      for (int b = 0; b < n; ++b) {
        const int w = m[static_cast<std::size_t>(b)];
        if (w == -1) continue;
        queue.emplace_back(s.plus(a, b), t.plus(v, w));
        queue.emplace_back(s.times(a, b), t.times(v, w));
      }
    }
    return true;
  };

  std::function<void(std::vector<int>)> descend = [&](std::vector<int> m) {
    int next = -1;
    for (int x = 0; x < n && next == -1; ++x)
      if (m[static_cast<std::size_t>(x)] == -1) next = x;
    if (next == -1) {
      out.push_back(std::move(m));
      return;
    }
    for (int y = 0; y < static_cast<int>(t.size()); ++y) {
      auto copy = m;
      if (assign(copy, next, y)) descend(std::move(copy));
    }
  };

  if (assign(map, s.zero, t.zero) && assign(map, s.one, t.one)) descend(map);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::int64_t>> tensor_relations(const RingHom& phi) {
  const auto& r = phi.domain;
  const auto& s = phi.codomain;
  const int n = static_cast<int>(s.size());
  const std::size_t gens = s.size() * s.size();
  auto gen = [n](int a, int b) { return static_cast<std::size_t>(a * n + b); };
  std::vector<std::vector<std::int64_t>> rows;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int t = 0; t < n; ++t) {
        std::vector<std::int64_t> left(gens, 0), right(gens, 0);
        left[gen(s.plus(a, b), t)] += 1;
        left[gen(a, t)] -= 1;
        left[gen(b, t)] -= 1;
        right[gen(t, s.plus(a, b))] += 1;
        right[gen(t, a)] -= 1;
        right[gen(t, b)] -= 1;
        rows.push_back(std::move(left));
        rows.push_back(std::move(right));
      }
  for (int x = 0; x < static_cast<int>(r.size()); ++x)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        std::vector<std::int64_t> row(gens, 0);
        row[gen(s.times(phi(x), a), b)] += 1;
        row[gen(a, s.times(phi(x), b))] -= 1;
        rows.push_back(std::move(row));
      }
  return rows;
}

TensorSquare tensor_square(const RingHom& phi) {
  const auto& s = phi.codomain;
  TensorSquare out;
  for (const auto& a : s.labels)
    for (const auto& b : s.labels) out.generator_labels.push_back(a + "⊗" + b);
  const std::size_t gens = out.generator_labels.size();
  // e·(s⊗t) = (e·s)⊗t = 0 for the characteristic e, so e·Z^gens lies in the lattice
  ExponentLattice lattice(gens, s.characteristic());
  auto rows = tensor_relations(phi);
  out.raw_relations = rows.size();
  for (auto& row : rows) lattice.add(std::move(row));
  out.presentation = {gens, lattice.basis()};
  out.smith = smith_normal_form(out.presentation.relations);
  out.smith_check = validate_smith(out.presentation.relations, out.smith);
  out.factors = invariant_factors(out.smith);
  out.order = group_order(out.factors);
  return out;
}

namespace {

// Membership in the row lattice of an upper-triangular basis.
bool in_lattice(const IntMatrix& basis, std::vector<Integer> v) {
  for (std::size_t j = 0; j < basis.cols; ++j) {
    if (v[j] == 0) continue;
    const Integer& p = basis(j, j);
    if (p == 0 || v[j] % p != 0) return false;
    const Integer q = v[j] / p;
    for (std::size_t k = j; k < basis.cols; ++k) v[k] -= q * basis(j, k);
  }
  return true;
}

}  // namespace

MultiplicationReport mult_map_is_iso(const RingHom& phi) {
  const auto& s = phi.codomain;
  const int n = static_cast<int>(s.size());
  MultiplicationReport out;
  out.ring_order = s.size();
  out.well_defined = Verdict::pass();
  for (const auto& row : tensor_relations(phi)) {
    int image = s.zero;
    for (std::size_t g = 0; g < row.size(); ++g) {
      if (row[g] == 0) continue;
      const int st = s.times(static_cast<int>(g) / n, static_cast<int>(g) % n);
      const int k = s.integer(row[g]);
      image = s.plus(image, s.times(k, st));
    }
    if (image != s.zero) {
      out.well_defined = Verdict::fail("multiplication well-defined", "a relation does not map to 0");
      break;
    }
  }
  const TensorSquare t = tensor_square(phi);
  out.tensor_order = t.order;
  out.factors = t.factors;
  if (!t.smith_check) {
    out.verdict = t.smith_check;
  } else if (t.order == Integer(out.ring_order)) {
    out.verdict = Verdict::pass();
  } else {
    // ker ∇ is spanned by s⊗t − st⊗1; report the least one that is nonzero.
    std::vector<std::string> witness;
    const std::size_t gens = t.generator_labels.size();
    for (int a = 0; a < n && witness.empty(); ++a)
      for (int b = 0; b < n && witness.empty(); ++b) {
        const auto st = static_cast<std::size_t>(s.times(a, b) * n + s.one);
        std::vector<Integer> v(gens);
        v[static_cast<std::size_t>(a * n + b)] += 1;
        v[st] -= 1;
        if (!in_lattice(t.presentation.relations, v))
          witness = {t.generator_labels[static_cast<std::size_t>(a * n + b)], t.generator_labels[st]};
      }
    out.verdict = Verdict::fail("multiplication map is an isomorphism",
                                "|S ⊗_R S| = " + t.order.str() + " but |S| = " + std::to_string(out.ring_order) +
                                    (witness.empty() ? "" : "; " + witness[0] + " − " + witness[1] + " lies in ker ∇ and is nonzero"),
                                witness);
  }
  return out;
}

LocalizationReport localization_exists_verdict(const RingHom& phi) {
  LocalizationReport out;
  out.mult = mult_map_is_iso(phi);
  out.exists = out.mult.verdict.holds && out.mult.well_defined.holds;
  const std::string orders = "|S ⊗_R S| = " + out.mult.tensor_order.str() +
                             ", |S| = " + std::to_string(out.mult.ring_order);
  out.conclusion = out.exists
                       ? "localization exists: the discrete model structure on Mod(R) has a Bousfield "
                         "localization with fibrant replacement − ⊗_R S (" + orders + ")"
                       : "no localization: − ⊗_R S is not the fibrant replacement of any Bousfield "
                         "localization of the discrete model structure on Mod(R) (" + orders + ")";
  return out;
}

}  // namespace discloc
