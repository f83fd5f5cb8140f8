#include <algorithm>

#include "circaut/error.hpp"
#include "circaut/solver.hpp"

namespace circaut {

NormalizeOutcome solve_multiplier(const CirculantGraph& graph, const Permutation& p) {
  if (p.degree() != graph.n()) throw InvalidInput("permutation degree differs from graph order");
  const Residue n = graph.n();
  const auto& S = graph.connection_set().elements();
  MultiplierWitness witness;
  witness.n = n;
  std::vector<std::pair<Residue, Residue>> congruences;
  const Modulus modulus(n);
  for (const PrimePower& pp : modulus.factors()) {
    auto it = std::find_if(S.begin(), S.end(), [&](Residue s) { return s % pp.prime != 0; });
    if (it == S.end()) {
      return {std::nullopt, "every generator is divisible by " + std::to_string(pp.prime)};
    }
    const Residue s = *it;
    const Residue q = pp.power;
    const Residue j_i = mod(p(static_cast<Vertex>(s)) * inverse_mod(s, q), q);
    if (j_i % pp.prime == 0) {
      return {std::nullopt, "residue mod " + std::to_string(q) + " is not a unit"};
    }
    witness.residues.push_back({pp.prime, q, j_i, s});
    congruences.emplace_back(j_i, q);
  }
  witness.combined = crt_combine(congruences).first;
  for (Residue s : S) {
    if (p(static_cast<Vertex>(s)) != mod(witness.combined * s, n)) {
      return {std::nullopt, "p(" + std::to_string(s) + ") = " +
                                std::to_string(p(static_cast<Vertex>(s))) + " but j*s = " +
                                std::to_string(mod(witness.combined * s, n))};
    }
  }
  return {std::move(witness), {}};
}

NormalizeOutcome normalize_to_multiplier(const CirculantGraph& graph, const Permutation& p) {
  if (p.degree() != graph.n()) throw InvalidInput("permutation degree differs from graph order");
  if (!is_connected(graph)) throw DomainError("normalization needs a connected circulant");
  if (p(0) != 0) throw DomainError("permutation does not fix 0");
  if (!is_automorphism(graph, p)) throw DomainError("permutation is not an automorphism");
  if (!respects_unchecked(graph, p, partition_C(graph))) {
    throw DomainError("automorphism does not respect partition C");
  }
  return solve_multiplier(graph, p);
}

Permutation normalizing_multiplier(const MultiplierWitness& witness) {
  return multiplier_perm(witness.n, inverse_mod(witness.combined, witness.n));
}

bool coset_image_check(const CirculantGraph& graph, const Permutation& p,
                       const std::vector<Residue>& subset) {
  const Residue n = graph.n();
  const Residue step = gcd_with(n, subset);
  // p is a bijection, so p(x + G) is a coset iff it sits inside p(x) + G
  for (Residue x = 0; x < n; ++x) {
    const Residue base = p(static_cast<Vertex>(x));
    for (Residue h = step; h < n; h += step) {
      if (mod(p(static_cast<Vertex>(mod(x + h, n))) - base, step) != 0) return false;
    }
  }
  return true;
}

}  // namespace circaut
