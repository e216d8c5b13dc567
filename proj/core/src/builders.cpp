#include "discloc/builders.hpp"

#include <map>

#include "discloc/error.hpp"

namespace discloc::build {

RawCategory poset(const std::vector<std::string>& objects,
                  const std::vector<std::pair<std::string, std::string>>& relations) {
  const std::size_t n = objects.size();
  std::map<std::string, std::size_t> at;
  for (std::size_t i = 0; i < n; ++i) at[objects[i]] = i;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (const auto& [a, b] : relations) {
    if (!at.count(a) || !at.count(b)) throw InputError("relation names an unknown object");
    leq[at[a]][at[b]] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && leq[i][j] && leq[j][i]) throw InputError("relations contain a cycle");

  auto name = [&](std::size_t i, std::size_t j) { return objects[i] + "_" + objects[j]; };
  RawCategory raw;
  raw.objects = objects;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && leq[i][j]) raw.morphisms.push_back({name(i, j), objects[i], objects[j]});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (i != j && j != k && leq[i][j] && leq[j][k])
          raw.compose.push_back({name(j, k), name(i, j), name(i, k)});
  return raw;
}

RawCategory chain(int n) {
  if (n < 1) throw InputError("chain needs at least one object");
  std::vector<std::string> objects;
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 0; i < n; ++i) {
    objects.push_back(std::to_string(i));
    if (i > 0) rel.emplace_back(std::to_string(i - 1), std::to_string(i));
  }
  return poset(objects, rel);
}

RawCategory diamond() { return poset({"b", "l", "r", "t"}, {{"b", "l"}, {"b", "r"}, {"l", "t"}, {"r", "t"}}); }

RawCategory pentagon() {
  return poset({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

RawCategory monoid(const std::vector<std::string>& elements,
                   const std::vector<std::vector<std::string>>& table) {
  RawCategory raw;
  raw.objects = {"*"};
  const std::string id = identity_name("*");
  for (const auto& e : elements) raw.morphisms.push_back({e, "*", "*"});
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j) {
      const std::string& gf = table.at(i).at(j);
      raw.compose.push_back({elements[i], elements[j], gf == "1" ? id : gf});
    }
  return raw;
}

RawCategory monoid_z2() { return monoid({"g"}, {{"1"}}); }
RawCategory monoid_idempotent() { return monoid({"e"}, {{"e"}}); }

RawCategory parallel_pair() {
  RawCategory raw;
  raw.objects = {"X", "Y"};
  raw.morphisms = {{"a", "X", "Y"}, {"b", "X", "Y"}};
  return raw;
}

RawCategory iso_pair() {
  RawCategory raw;
  raw.objects = {"a", "b"};
  raw.morphisms = {{"f", "a", "b"}, {"g", "b", "a"}};
  raw.compose = {{"g", "f", identity_name("a")}, {"f", "g", identity_name("b")}};
  return raw;
}

RawCategory pointed_sets2() {
  RawCategory raw;
  raw.objects = {"0", "S"};
  // i: 0 → S the basepoint, t: S → 0, c = i ∘ t the constant map
  raw.morphisms = {{"c", "S", "S"}, {"i", "0", "S"}, {"t", "S", "0"}};
  raw.compose = {{"t", "i", identity_name("0")},
                 {"i", "t", "c"},
                 {"c", "c", "c"},
                 {"c", "i", "i"},
                 {"t", "c", "t"}};
  return raw;
}

}  // namespace discloc::build
