#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "discloc/smith.hpp"
#include "discloc/verdict.hpp"

namespace discloc {

inline constexpr std::size_t kDefaultMaxRingSize = 16;

/// A finite commutative ring by its operation tables over element indices.
struct FiniteRing {
  std::vector<std::string> labels;
  std::vector<int> add;  // add[a * n + b]
  std::vector<int> mul;
  int zero = 0;
  int one = 0;

  std::size_t size() const { return labels.size(); }
  int plus(int a, int b) const { return add[static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b)]; }
  int times(int a, int b) const { return mul[static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b)]; }
  int negate(int a) const;
  /// k-fold sum of one (k may be negative).
  int integer(std::int64_t k) const;
  std::optional<int> find(const std::string& label) const;
  /// Additive order of one, which is the exponent of the additive group.
  std::int64_t characteristic() const;

  friend bool operator==(const FiniteRing&, const FiniteRing&) = default;
};

/// Exhaustive commutative-ring axiom check.
Verdict validate_ring(const FiniteRing& r);

/// Validates; throws InputError on a failed axiom or a size above `max_size`.
FiniteRing make_ring(FiniteRing r, std::size_t max_size = kDefaultMaxRingSize);

FiniteRing zn(int n, std::size_t max_size = kDefaultMaxRingSize);
FiniteRing product(const std::vector<FiniteRing>& factors, std::size_t max_size = kDefaultMaxRingSize);
/// base[x]/(poly), coefficients low to high as element indices of `base`.
/// The leading coefficient must be one.
FiniteRing polyquo(const FiniteRing& base, const std::vector<int>& poly,
                   std::size_t max_size = kDefaultMaxRingSize);

struct RingHom {
  FiniteRing domain;
  FiniteRing codomain;
  std::vector<int> map;

  int operator()(int a) const { return map[static_cast<std::size_t>(a)]; }
};

Verdict validate_hom(const RingHom& phi);
/// Throws InputError unless validate_hom passes.
RingHom make_hom(FiniteRing domain, FiniteRing codomain, std::vector<int> map);
RingHom identity_hom(const FiniteRing& r);

/// All unital ring maps s → t in lexicographic order of their tables.
std::vector<std::vector<int>> ring_homs(const FiniteRing& s, const FiniteRing& t);

/// Abelian group ⟨generators | rows of relations⟩.
struct AbPresentation {
  std::size_t generators = 0;
  IntMatrix relations;
};

/// Biadditivity and balancing relations of S ⊗_R S on generators (s, t),
/// column s·|S| + t.
std::vector<std::vector<std::int64_t>> tensor_relations(const RingHom& phi);

struct TensorSquare {
  std::vector<std::string> generator_labels;  // "s⊗t"
  std::size_t raw_relations = 0;
  /// Hermite basis of the relation lattice; presents the same group as the
  /// raw relations.
  AbPresentation presentation;
  SmithForm smith;
  Verdict smith_check;
  std::vector<Integer> factors;
  Integer order;
};

TensorSquare tensor_square(const RingHom& phi);

struct MultiplicationReport {
  Verdict verdict;  // ∇: S ⊗_R S → S is an isomorphism
  Verdict well_defined;
  Integer tensor_order;
  std::size_t ring_order = 0;
  std::vector<Integer> factors;
};

MultiplicationReport mult_map_is_iso(const RingHom& phi);

struct LocalizationReport {
  MultiplicationReport mult;
  bool exists = false;
  std::string conclusion;
};

LocalizationReport localization_exists_verdict(const RingHom& phi);

}  // namespace discloc
