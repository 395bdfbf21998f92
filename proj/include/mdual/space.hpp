/* Copyright 2026 The mdual Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef MDUAL_SPACE_HPP
#define MDUAL_SPACE_HPP

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mdual/subset.hpp"

namespace mdual {

using Point = std::size_t;

// A finite topological space with a binary relation. The topology is an
// explicit family of open sets, kept sorted by canonical_less so that
// opens()[0] is ∅ and opens().back() is the whole carrier.
class RelationalSpace {
 public:
  using Pair = std::pair<std::string, std::string>;

  // The empty space, whose only open is ∅.
  RelationalSpace() : opens_{Subset(0)}, open_index_{{Subset(0), 0}} {}

  // Checks the topology as given (no completion). Throws NotATopology with
  // the two opens whose union or intersection is missing, or UnknownPoint.
  static RelationalSpace validate(std::vector<std::string> points,
                                  const std::vector<std::vector<std::string>>& opens,
                                  const std::vector<Pair>& relation);

  // Same, from index data; `successors[x]` is R→(x).
  static RelationalSpace from_sets(std::vector<std::string> points, std::vector<Subset> opens,
                                   std::vector<Subset> successors);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::string& id(Point x) const { return ids_.at(x); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  Point index_of(std::string_view id) const;

  const std::vector<Subset>& opens() const noexcept { return opens_; }
  bool is_open(const Subset& u) const { return open_index_.contains(u); }
  // Position of an open set in opens(); throws if `u` is not open.
  std::size_t open_position(const Subset& u) const;

  const Subset& successors(Point x) const { return succ_[x]; }
  const std::vector<Subset>& relation() const noexcept { return succ_; }
  bool related(Point x, Point y) const { return succ_[x].test(y); }

  Subset empty_set() const { return Subset(size()); }
  Subset all() const { return full_subset(size()); }

  friend bool operator==(const RelationalSpace& a, const RelationalSpace& b) {
    return a.ids_ == b.ids_ && a.opens_ == b.opens_ && a.succ_ == b.succ_;
  }

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, Point> index_;
  std::vector<Subset> opens_;
  std::unordered_map<Subset, std::size_t> open_index_;
  std::vector<Subset> succ_;
};

// Smallest topology containing `basis` together with ∅ and the carrier.
std::vector<Subset> generate_topology(std::size_t n, const std::vector<Subset>& basis);

// Classical operators on arbitrary subsets.
Subset box_class(const RelationalSpace& s, const Subset& u);
Subset dia_class(const RelationalSpace& s, const Subset& u);

Subset interior(const RelationalSpace& s, const Subset& u);
Subset closure(const RelationalSpace& s, const Subset& u);
// Smallest open set containing u (an intersection of opens; finite).
Subset saturation(const RelationalSpace& s, const Subset& u);

// x ⊑ y iff every open containing x contains y.
bool specialization_leq(const RelationalSpace& s, Point x, Point y);
bool is_closed(const RelationalSpace& s, const Subset& u);
bool is_saturated(const RelationalSpace& s, const Subset& u);
bool is_lens(const RelationalSpace& s, const Subset& u);

struct SpaceClass {
  bool usc = false;
  bool lsc = false;
  bool continuous = false;
  bool serial = false;
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
  bool equivalence_space = false;  // continuous and an equivalence relation
};

SpaceClass classify_space(const RelationalSpace& s);

// --- morphisms ---

enum class MorphismLevel { NotContinuous, Continuous, Relational, PMorphism, PQMorphism };
std::string_view to_string(MorphismLevel level);

struct SpaceMorphismClass {
  MorphismLevel level = MorphismLevel::NotContinuous;
  bool continuous = false;
  bool forward = false;  // x R y ⟹ f(x) S f(y)
  bool back_p = false;   // f(x) S y ∈ U ⟹ ∃x'. x R x' ∧ f(x') ∈ U
  bool back_q = false;   // f(x) S y ∉ U ⟹ ∃x'. x R x' ∧ f(x') ∉ U
  bool open_map = false;
  // Counterexample per failed condition, in readable form.
  std::vector<std::string> witnesses;
};

Subset preimage(std::span<const Point> map, std::size_t source_size, const Subset& u);
Subset image(std::span<const Point> map, std::size_t target_size, const Subset& u);

SpaceMorphismClass classify_space_morphism(const RelationalSpace& source,
                                           const RelationalSpace& target,
                                           std::span<const Point> map);

// True iff `map` reaches `required` (and is continuous).
bool at_least(const SpaceMorphismClass& cls, MorphismLevel required);

struct SpaceMorphism {
  RelationalSpace source;
  RelationalSpace target;
  std::vector<Point> map;
};

inline SpaceMorphismClass classify_space_morphism(const SpaceMorphism& m) {
  return classify_space_morphism(m.source, m.target, m.map);
}

// "{x,y}" with points in index order.
std::string set_name(const RelationalSpace& s, const Subset& u);

}  // namespace mdual

#endif  // MDUAL_SPACE_HPP
