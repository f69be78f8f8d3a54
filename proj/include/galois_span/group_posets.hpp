#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "character.hpp"
#include "group.hpp"
#include "poset.hpp"

namespace galois_span {

// Poset whose first subgroups.size() elements are subgroups ordered by
// inclusion; any adjoined element (the bottom or top marker) comes last.
struct SubgroupPoset {
  Poset poset;
  std::vector<Subgroup> subgroups;

  std::size_t marker() const { return subgroups.size(); }
  std::size_t index_of(const Subgroup& h) const {
    auto it = std::find(subgroups.begin(), subgroups.end(), h);
    if (it == subgroups.end()) fail(Errc::NotASubgroup, "subgroup is not an element of this poset");
    return static_cast<std::size_t>(it - subgroups.begin());
  }
};

inline Poset inclusion_poset(const FiniteGroup& g, const std::vector<Subgroup>& subs) {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq(subs.size(), std::vector<bool>(subs.size(), false));
  for (std::size_t a = 0; a < subs.size(); ++a) {
    labels.push_back(subgroup_label(g, subs[a]));
    for (std::size_t b = 0; b < subs.size(); ++b) leq[a][b] = subs[a].is_subset_of(subs[b]);
  }
  return Poset(std::move(labels), std::move(leq));
}

inline std::vector<Subgroup> irreducible_kernels(const CharacterTable& ct) {
  std::set<Subgroup> ks;
  for (const Character& c : ct.characters) ks.insert(kernel_of(ct, c));
  return {ks.begin(), ks.end()};
}

// Kernels of irreducible characters with a bottom element adjoined.
inline SubgroupPoset kernel_poset(const CharacterTable& ct) {
  std::vector<Subgroup> subs = irreducible_kernels(ct);
  return {adjoin_bottom(inclusion_poset(ct.group, subs), "∅"), subs};
}

// Cyclic subgroups with a top element adjoined.
inline SubgroupPoset cyclic_poset(const FiniteGroup& g) {
  std::vector<Subgroup> subs = cyclic_subgroups(g);
  return {adjoin_top(inclusion_poset(g, subs), "∞"), subs};
}

inline SubgroupPoset subgroup_lattice(const FiniteGroup& g, int max_order = order_limit()) {
  std::vector<Subgroup> subs = all_subgroups(g, max_order);
  return {inclusion_poset(g, subs), subs};
}

}  // namespace galois_span
