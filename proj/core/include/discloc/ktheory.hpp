#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "discloc/fincat.hpp"
#include "discloc/reflect.hpp"
#include "discloc/smith.hpp"
#include "discloc/verdict.hpp"

namespace discloc {

struct WaldhausenMorphism {
  int src = 0;
  int dst = 0;
  std::string label;
  /// Truncated groups only: row i is the image of the i-th cyclic generator
  /// of the source.
  std::vector<std::vector<int>> matrix;
};

/// Pointed category with cofibrations, weak equivalences and a cofiber for
/// every morphism. Built either from a FinCat or from truncated abelian
/// p-groups.
struct WaldhausenData {
  std::vector<std::string> objects;
  int zero = 0;
  std::vector<WaldhausenMorphism> morphisms;
  std::vector<bool> cofibration;
  std::vector<bool> weak;
  std::vector<int> cofiber;    // per morphism
  std::vector<int> iso_class;  // least isomorphic object, per object
  bool bicomplete = false;
  std::string note;
};

/// cof = all, we as given. Throws HypothesisError when C has no zero object
/// or a cofiber pushout is missing.
WaldhausenData waldhausen_from_category(const FinCat& c, const MorphismClass& we);
/// we = the maps the reflector inverts.
WaldhausenData waldhausen_from_localization(const FinCat& c, const Reflector& r);

enum class WeakChoice { isomorphisms, all };

/// Exponent partitions (descending) of abelian p-groups of order ≤ p^bound,
/// by total exponent, then descending lexicographically.
std::vector<std::vector<int>> abelian_types(int p, int bound);

/// Σ over object pairs of Π p^min(a_i, b_j).
std::size_t truncated_hom_count(int p, int bound);

/// Objects: abelian p-groups of order ≤ p^bound. Morphisms: all
/// homomorphisms. Throws InputError unless p is prime, p^bound ≤ 64 and the
/// morphism count stays within `max_morphisms`.
WaldhausenData truncated_abelian(int p, int bound, WeakChoice we,
                                 std::size_t max_morphisms = std::size_t{1} << 16);

std::string abelian_label(int p, const std::vector<int>& exponents);

/// Exponent partition of B / f(A) for f given by generator images.
std::vector<int> quotient_type(int p, const std::vector<int>& target,
                               const std::vector<std::vector<int>>& images);

int cofiber(const WaldhausenData& w, std::size_t f);

enum class RelationTag { cofiber_sequence, weak_equivalence };

struct K0Presentation {
  std::vector<int> generators;  // representative object per generator
  std::vector<std::string> generator_labels;
  IntMatrix relations;
  std::vector<RelationTag> tags;
  std::vector<std::size_t> sources;  // morphism inducing each row
};

K0Presentation k0_presentation(const WaldhausenData& w);

struct K0Group {
  std::vector<Integer> factors;  // empty: trivial
  Verdict smith_check;
  std::size_t distinct_relations = 0;
};

K0Group k0_group(const K0Presentation& p);

/// Every generator [A] has a row equal to the unit vector e_A, induced by a
/// map that factors through the zero object.
Verdict zero_map_mechanism(const WaldhausenData& w, const K0Presentation& p);

}  // namespace discloc
