#include "discloc/lifting.hpp"

#include "discloc/error.hpp"

namespace discloc {

bool commutes(const FinCat& c, const Square& sq) {
  if (c.src(sq.left) != c.src(sq.top) || c.dst(sq.top) != c.src(sq.right) ||
      c.dst(sq.left) != c.src(sq.bottom) || c.dst(sq.bottom) != c.dst(sq.right))
    return false;
  return c.compose(sq.right, sq.top) == c.compose(sq.bottom, sq.left);
}

std::vector<MorId> lifts(const FinCat& c, const Square& sq) {
  if (!commutes(c, sq)) throw InputError("square does not commute");
  std::vector<MorId> out;
  for (MorId d : c.hom(c.dst(sq.left), c.src(sq.right)))
    if (c.compose(d, sq.left) == sq.top && c.compose(sq.right, d) == sq.bottom) out.push_back(d);
  return out;
}

std::vector<Square> commuting_squares(const FinCat& c, MorId left, MorId right) {
  std::vector<Square> out;
  const auto& tops = c.hom(c.src(left), c.src(right));
  if (tops.empty()) return out;
  const auto& bottoms = c.hom(c.dst(left), c.dst(right));
  for (MorId top : tops) {
    const MorId upper = c.compose(right, top);
    for (MorId bottom : bottoms)
      if (c.compose(bottom, left) == upper) out.push_back({left, right, top, bottom});
  }
  return out;
}

namespace {

bool has_filler(const FinCat& c, const Square& sq) {
  for (MorId d : c.hom(c.dst(sq.left), c.src(sq.right)))
    if (c.compose(d, sq.left) == sq.top && c.compose(sq.right, d) == sq.bottom) return true;
  return false;
}

}  // namespace

std::optional<Square> lifting_failure(const FinCat& c, MorId left, MorId right) {
  const auto& tops = c.hom(c.src(left), c.src(right));
  if (tops.empty()) return std::nullopt;
  const auto& bottoms = c.hom(c.dst(left), c.dst(right));
  if (bottoms.empty()) return std::nullopt;
  for (MorId top : tops) {
    const MorId upper = c.compose(right, top);
    for (MorId bottom : bottoms) {
      if (c.compose(bottom, left) != upper) continue;
      Square sq{left, right, top, bottom};
      if (!has_filler(c, sq)) return sq;
    }
  }
  return std::nullopt;
}

std::optional<Square> rlp_failure(const FinCat& c, const MorphismClass& e, MorId f) {
  for (int g : e.members())
    if (auto sq = lifting_failure(c, g, f)) return sq;
  return std::nullopt;
}

std::optional<Square> llp_failure(const FinCat& c, const MorphismClass& e, MorId f) {
  for (int g : e.members())
    if (auto sq = lifting_failure(c, f, g)) return sq;
  return std::nullopt;
}

MorphismClass rlp_class(const FinCat& c, const MorphismClass& e) {
  if (e.universe() != c.morphism_count()) throw ShapeError("class does not belong to category");
  MorphismClass out(c.morphism_count());
  for (std::size_t f = 0; f < c.morphism_count(); ++f)
    if (!rlp_failure(c, e, static_cast<MorId>(f))) out.insert(static_cast<int>(f));
  return out;
}

MorphismClass llp_class(const FinCat& c, const MorphismClass& e) {
  if (e.universe() != c.morphism_count()) throw ShapeError("class does not belong to category");
  MorphismClass out(c.morphism_count());
  for (std::size_t f = 0; f < c.morphism_count(); ++f)
    if (!llp_failure(c, e, static_cast<MorId>(f))) out.insert(static_cast<int>(f));
  return out;
}

MorphismClass strong_monos(const FinCat& c) { return rlp_class(c, epimorphisms(c)); }

WellCompletenessReport is_finitely_well_complete(const FinCat& c) {
  WellCompletenessReport report;
  report.reduction =
      "families of strong monomorphisms in a finite category are finite; their intersections "
      "are iterated binary pullbacks taken in canonical order";
  report.limits = is_finitely_complete(c);
  if (!report.limits.holds) {
    report.failure = "missing finite limit: " + report.limits.missing_description;
    return report;
  }

  const MorphismClass strong = strong_monos(c);
  for (std::size_t y = 0; y < c.object_count(); ++y) {
    std::vector<MorId> family;
    for (int f : strong.members())
      if (c.dst(f) == static_cast<ObjId>(y)) family.push_back(f);

    // Returns the leg into y of the iterated pullback, or nothing.
    auto intersect = [&](const std::vector<MorId>& monos) -> std::optional<MorId> {
      MorId acc = monos.front();
      for (std::size_t i = 1; i < monos.size(); ++i) {
        auto pb = limit_search(c, LimitQuery::pullback(acc, monos[i]));
        if (!pb.exists) return std::nullopt;
        acc = pb.cone->legs[2];
      }
      return acc;
    };

    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = i; j < family.size(); ++j) {
        ++report.families_checked;
        if (!intersect({family[i], family[j]})) {
          report.failure = "no intersection of " + c.morphism_name(family[i]) + " and " +
                           c.morphism_name(family[j]);
          return report;
        }
      }
    if (family.size() > 2) {
      ++report.families_checked;
      if (!intersect(family)) {
        report.failure = "no intersection of the strong monomorphisms into " +
                         c.object_name(static_cast<ObjId>(y));
        return report;
      }
    }
  }
  report.holds = true;
  return report;
}

std::vector<std::string> square_names(const FinCat& c, const Square& sq) {
  return {c.morphism_name(sq.left), c.morphism_name(sq.right), c.morphism_name(sq.top),
          c.morphism_name(sq.bottom)};
}

Verdict verify_factorization_system(const FinCat& c, const FactorizationSystem& fs) {
  if (fs.factor.size() != c.morphism_count())
    throw InputError("factorization map is not total");
  for (std::size_t i = 0; i < c.morphism_count(); ++i) {
    const MorId f = static_cast<MorId>(i);
    const auto [e, m] = fs.factor[i];
    const std::size_t n = c.morphism_count();
    if (e < 0 || m < 0 || static_cast<std::size_t>(e) >= n || static_cast<std::size_t>(m) >= n)
      throw InputError("factorization of " + c.morphism_name(f) + " is missing");
    if (!c.composable(m, e) || c.compose(m, e) != f)
      return Verdict::fail("factorization", "m∘e != f",
                           {c.morphism_name(f), c.morphism_name(e), c.morphism_name(m)});
    if (!fs.left.contains(e))
      return Verdict::fail("factorization", "left factor is not in E",
                           {c.morphism_name(f), c.morphism_name(e)});
    if (!fs.right.contains(m))
      return Verdict::fail("factorization", "right factor is not in M",
                           {c.morphism_name(f), c.morphism_name(m)});
  }
  for (std::size_t i = 0; i < c.morphism_count(); ++i) {
    const MorId f = static_cast<MorId>(i);
    auto failure = rlp_failure(c, fs.left, f);
    if (fs.right.contains(f) && failure) {
      auto w = square_names(c, *failure);
      w.insert(w.begin(), c.morphism_name(f));
      return Verdict::fail("E↓ = M", "member of M lacks a lift against E", w);
    }
    if (!fs.right.contains(f) && !failure)
      return Verdict::fail("E↓ = M", "morphism lifts against E but is not in M",
                           {c.morphism_name(f)});
  }
  for (std::size_t i = 0; i < c.morphism_count(); ++i) {
    const MorId f = static_cast<MorId>(i);
    auto failure = llp_failure(c, fs.right, f);
    if (fs.left.contains(f) && failure) {
      auto w = square_names(c, *failure);
      w.insert(w.begin(), c.morphism_name(f));
      return Verdict::fail("M↑ = E", "member of E lacks a lift against M", w);
    }
    if (!fs.left.contains(f) && !failure)
      return Verdict::fail("M↑ = E", "morphism lifts against M but is not in E",
                           {c.morphism_name(f)});
  }
  return Verdict::pass();
}

std::vector<Factorization> all_factorizations(const FinCat& c, const MorphismClass& e,
                                              const MorphismClass& m, MorId f) {
  std::vector<Factorization> out;
  for (std::size_t z = 0; z < c.object_count(); ++z) {
    const ObjId mid = static_cast<ObjId>(z);
    for (MorId first : c.hom(c.src(f), mid)) {
      if (!e.contains(first)) continue;
      for (MorId second : c.hom(mid, c.dst(f)))
        if (m.contains(second) && c.compose(second, first) == f) out.push_back({first, second});
    }
  }
  return out;
}

Verdict factorizations_unique_up_to_iso(const FinCat& c, const FactorizationSystem& fs) {
  for (std::size_t i = 0; i < c.morphism_count(); ++i) {
    const MorId f = static_cast<MorId>(i);
    const auto all = all_factorizations(c, fs.left, fs.right, f);
    for (const auto& a : all)
      for (const auto& b : all) {
        std::size_t isos = 0;
        for (MorId u : c.hom(c.dst(a.e), c.dst(b.e)))
          if (c.compose(u, a.e) == b.e && c.compose(b.m, u) == a.m && is_iso(c, u)) ++isos;
        if (isos != 1)
          return Verdict::fail("unique factorization",
                               "two factorizations are not related by a unique isomorphism",
                               {c.morphism_name(f), c.morphism_name(a.e), c.morphism_name(a.m),
                                c.morphism_name(b.e), c.morphism_name(b.m)});
      }
  }
  return Verdict::pass();
}

}  // namespace discloc
