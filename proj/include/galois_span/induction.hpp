#pragma once

#include <string>
#include <vector>

#include "character.hpp"
#include "group_posets.hpp"
#include "report.hpp"

namespace galois_span {

// Coefficients a(C) over cyclic_subgroups(G) with chi = sum_C a(C) Ind_C^G(1):
//   a(C) = (1/[G:C]) sum_{C <= B cyclic} mu([B:C]) chi(g_B).
inline std::vector<Rational> artin_coefficients(const CharacterTable& ct, const ClassFunction& chi) {
  const FiniteGroup& g = ct.group;
  if (chi.values.size() != ct.class_count()) fail(Errc::MismatchedGroup, "class function belongs to a different group");
  const std::vector<Subgroup> cyc = cyclic_subgroups(g);
  // chi at the generators of each cyclic subgroup
  std::vector<Rational> at_gen;
  for (const Subgroup& b : cyc) {
    std::optional<Rational> v;
    for (int x : b.elements) {
      if (element_order(g, x) != b.order()) continue;
      const Rational here = chi.values[static_cast<std::size_t>(ct.class_of[static_cast<std::size_t>(x)])];
      if (v && *v != here) fail(Errc::GeneratorDependent, "value differs between generators of a cyclic subgroup");
      v = here;
    }
    at_gen.push_back(*v);
  }
  std::vector<Rational> a;
  for (const Subgroup& c : cyc) {
    Rational s = 0;
    for (std::size_t j = 0; j < cyc.size(); ++j)
      if (c.is_subset_of(cyc[j])) s += Rational(classical_mobius(cyc[j].order() / c.order())) * at_gen[j];
    a.push_back(s / index(g, c));
  }
  ClassFunction rebuilt{std::vector<Rational>(ct.class_count(), Rational(0))};
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    if (a[i].is_zero()) continue;
    const ClassFunction ind = induced_trivial_character(ct, cyc[i]);
    for (std::size_t k = 0; k < ct.class_count(); ++k) rebuilt.values[k] += a[i] * ind.values[k];
  }
  if (!(rebuilt == chi)) fail(Errc::InternalInconsistency, "Artin expansion does not reproduce the character");
  return a;
}

inline std::vector<Rational> artin_coefficients(const CharacterTable& ct, const Character& chi) {
  auto cf = as_class_function(chi);
  if (!cf) fail(Errc::NotRationalValued, "character takes non-rational values");
  return artin_coefficients(ct, *cf);
}

inline bool is_irreducibly_represented(const CharacterTable& ct) {
  for (const Character& c : ct.characters)
    if (kernel_of(ct, c).order() == 1) return true;
  return false;
}

inline BigInt mu_trivial_to_top(const FiniteGroup& g) {
  const SubgroupPoset cp = cyclic_poset(g);
  const MobiusTable mu = mobius(cp.poset);
  return mu(cp.index_of(trivial_subgroup(g)), cp.marker());
}

// mu({1}, top) = 0 in the cyclic-subgroup poset with a top adjoined.
inline bool is_exceptional(const FiniteGroup& g) { return mu_trivial_to_top(g).is_zero(); }

// Checks -sum_C mu(C,top)/[G:C] = 1 and, for every nontrivial irreducible rho,
// sum_C mu(C,top) a_{rho,C}/[G:C] = 0 with a_{rho,C} = <Ind_C^G 1, rho>.
inline VerificationReport verify_eq3(const CharacterTable& ct) {
  Stopwatch sw;
  const FiniteGroup& g = ct.group;
  const SubgroupPoset cp = cyclic_poset(g);
  const MobiusTable mu = mobius(cp.poset);
  VerificationReport r;
  r.claim = "cyclic-subgroup Mobius identities";
  r.inputs = g.name();
  Rational first = 0;
  std::vector<ClassFunction> induced;
  for (std::size_t i = 0; i < cp.subgroups.size(); ++i) {
    first -= Rational(mu(i, cp.marker())) / index(g, cp.subgroups[i]);
    induced.push_back(induced_trivial_character(ct, cp.subgroups[i]));
  }
  bool ok = first == 1;
  nlohmann::ordered_json per_char = nlohmann::ordered_json::array();
  for (std::size_t c = 1; c < ct.characters.size(); ++c) {
    Rational s = 0;
    for (std::size_t i = 0; i < cp.subgroups.size(); ++i)
      s += Rational(mu(i, cp.marker())) * inner_product(ct, induced[i], ct.characters[c]) / index(g, cp.subgroups[i]);
    per_char.push_back(to_string(s));
    ok = ok && s.is_zero();
  }
  r.left = to_string(first);
  r.right = "1";
  r.details["nontrivial_sums"] = per_char;
  r.verdict = verdict_from(ok);
  r.millis = sw.millis();
  return r;
}

}  // namespace galois_span
