#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "discloc/fincat.hpp"

namespace discloc {

enum class Shape { terminal, initial, product, coproduct, pullback, pushout, equalizer, coequalizer };

std::string_view to_string(Shape s);
bool is_colimit_shape(Shape s);

/// A finite limit or colimit to search for.
///   product/coproduct: objects = {a, b}
///   pullback:          morphisms = {f, g}, a cospan (dst f == dst g)
///   pushout:           morphisms = {f, g}, a span (src f == src g)
///   (co)equalizer:     morphisms = {f, g}, parallel
struct LimitQuery {
  Shape shape = Shape::terminal;
  std::vector<ObjId> objects;
  std::vector<MorId> morphisms;

  static LimitQuery terminal() { return {Shape::terminal, {}, {}}; }
  static LimitQuery initial() { return {Shape::initial, {}, {}}; }
  static LimitQuery product(ObjId a, ObjId b) { return {Shape::product, {a, b}, {}}; }
  static LimitQuery coproduct(ObjId a, ObjId b) { return {Shape::coproduct, {a, b}, {}}; }
  static LimitQuery pullback(MorId f, MorId g) { return {Shape::pullback, {}, {f, g}}; }
  static LimitQuery pushout(MorId f, MorId g) { return {Shape::pushout, {}, {f, g}}; }
  static LimitQuery equalizer(MorId f, MorId g) { return {Shape::equalizer, {}, {f, g}}; }
  static LimitQuery coequalizer(MorId f, MorId g) { return {Shape::coequalizer, {}, {f, g}}; }

  std::string describe(const FinCat& c) const;
};

/// A finite diagram: nodes are objects, edges are morphisms between nodes.
struct Diagram {
  struct Edge {
    std::size_t from;
    std::size_t to;
    MorId arrow;
  };
  std::vector<ObjId> nodes;
  std::vector<Edge> edges;
};

/// The diagram a query ranges over. For colimit shapes the edges are read in
/// the opposite category (arrow runs nodes[to] → nodes[from] in `c`).
Diagram diagram_of(const FinCat& c, const LimitQuery& q);

/// Legs run apex → node for limits and node → apex for colimits, in the
/// node order of diagram_of().
struct Cone {
  ObjId apex = -1;
  std::vector<MorId> legs;

  friend bool operator==(const Cone&, const Cone&) = default;
};

struct LimitResult {
  bool exists = false;
  std::optional<Cone> cone;
  /// Number of cones the universal property was checked against (each had
  /// exactly one mediating morphism).
  std::size_t competing_cones = 0;
  std::size_t cones_total = 0;
  std::string absence;
};

/// Brute-force (co)limit search. The returned cone is the canonical-least
/// universal one; throws InputError if the query's morphisms do not form
/// the required span/cospan/parallel pair.
LimitResult limit_search(const FinCat& c, const LimitQuery& q);

/// Every cone over the query's diagram, in canonical order.
std::vector<Cone> all_cones(const FinCat& c, const LimitQuery& q);

struct BicompletenessReport {
  bool holds = false;
  std::optional<LimitQuery> missing;
  std::string missing_description;
  bool thin = false;
  /// A finite finitely-complete category must be thin; false flags a
  /// contradiction between the two computations.
  bool freyd_consistent = true;
};

/// Terminal, initial, binary (co)products and (co)equalizers of all
/// parallel pairs.
BicompletenessReport is_finitely_bicomplete(const FinCat& c);

/// Terminal, binary products and equalizers.
BicompletenessReport is_finitely_complete(const FinCat& c);

std::optional<ObjId> terminal_object(const FinCat& c);
std::optional<ObjId> initial_object(const FinCat& c);

}  // namespace discloc
