#pragma once

#include <string>
#include <utility>
#include <vector>

#include "discloc/fincat.hpp"

namespace discloc::build {

/// Thin category of a finite poset given by generating relations a ≤ b.
/// The morphism a → b is named "a_b".
RawCategory poset(const std::vector<std::string>& objects,
                  const std::vector<std::pair<std::string, std::string>>& relations);

/// 0 < 1 < ... < n-1.
RawCategory chain(int n);
/// b < l, r < t.
RawCategory diamond();
/// 0 < a < b < 1, 0 < c < 1.
RawCategory pentagon();

/// One object "*"; table[i][j] names elements[i] ∘ elements[j], with "1"
/// standing for the identity.
RawCategory monoid(const std::vector<std::string>& elements,
                   const std::vector<std::vector<std::string>>& table);
RawCategory monoid_z2();
RawCategory monoid_idempotent();

/// X ⇉ Y with arrows a, b.
RawCategory parallel_pair();
/// a ≅ b via f: a → b and g: b → a.
RawCategory iso_pair();
/// Pointed sets with at most two elements: the zero object "0" and "S".
RawCategory pointed_sets2();

}  // namespace discloc::build
