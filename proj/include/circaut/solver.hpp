#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "circaut/circulant.hpp"
#include "circaut/perm.hpp"
#include "circaut/zmod.hpp"

namespace circaut {

struct SearchConfig {
  bool fix_zero = true;
  /// Filter all permutations instead of backtracking.
  bool oracle_mode = false;
  /// Exceeding this many solutions raises ResourceError.
  std::optional<std::size_t> max_solutions;
  int max_n = 64;
  int oracle_limit = 9;
};

/// All automorphisms p of `graph` (with p(0) = 0 when cfg.fix_zero) that
/// respect `partition`, in lexicographic order of their image arrays.
///
/// Depth-first assignment of images over a BFS order from 0 (neighbors by
/// ascending generator). Each new assignment must keep adjacency in both
/// directions with every assigned vertex, and every arc between assigned
/// vertices extends a partial part-to-part map that stays injective both
/// ways and size-preserving. Completed maps are re-checked with respects().
std::vector<Permutation> enumerate_respecting(const CirculantGraph& graph,
                                              const ArcPartition& partition,
                                              const SearchConfig& cfg = {});

/// Same contract as enumerate_respecting, by filtering every permutation
/// (fixing 0 when asked). Throws ResourceError when n > oracle_limit.
std::vector<Permutation> brute_oracle(const CirculantGraph& graph,
                                      const ArcPartition& partition, bool fix_zero,
                                      int oracle_limit = 9);

/// Order in which the enumerator assigns vertices.
std::vector<Vertex> search_order(const CirculantGraph& graph);

struct NormalizeOutcome {
  std::optional<MultiplierWitness> witness;
  std::string failure;  // set when witness is empty

  bool ok() const { return witness.has_value(); }
};

/// Per prime power p^e of n: picks the least s in S with p not dividing s
/// and solves p(s) = j_i * s (mod p^e), then CRT-combines the j_i and checks
/// p(s) = j*s for every s in S. No precondition checks beyond degree; a
/// non-unit residue or a failed check gives a failure outcome.
NormalizeOutcome solve_multiplier(const CirculantGraph& graph, const Permutation& p);

/// Multiplier normalization for an automorphism fixing 0 that respects C on
/// a connected circulant. Throws DomainError when the graph is disconnected,
/// p(0) != 0, p is not an automorphism, or p does not respect C.
NormalizeOutcome normalize_to_multiplier(const CirculantGraph& graph, const Permutation& p);

/// beta = multiplication by j^{-1}; compose(beta, p) fixes every a*s.
Permutation normalizing_multiplier(const MultiplierWitness& witness);

struct PropagationRound {
  std::vector<Residue> matched;  // every x satisfying the closure rule this round
  std::vector<Residue> added;    // the part of `matched` not already fixed
  bool coset_union = true;       // fixed set was a union of cosets of <n/d>
};

struct PropagationStage {
  int k = 0;                  // S_k = <s_1..s_k> is the base
  Residue next_generator = 0;  // s_{k+1}
  Residue base_order = 0;      // n' = |S_k|
  Residue generator_order = 0;  // r = |s_{k+1}|
  Residue d = 0;               // gcd(n', r)
  std::vector<Residue> initial;  // T_0
  std::vector<PropagationRound> rounds;  // only rounds that added something
  std::vector<Residue> final_set;
  bool reached_subgroup = false;  // final_set == S_{k+1}
};

struct PropagationTrace {
  Residue n = 0;
  std::vector<Residue> order;  // generator sequence s_1..s_c used
  std::vector<PropagationStage> stages;
  std::vector<Residue> final_set;
  bool covered = false;  // final_set == Z_n
  bool invariant_held = true;

  int total_rounds() const;
};

/// Replays the fixed-set closure of the nested induction, independent of any
/// automorphism. `order` defaults to S ascending and must otherwise be a
/// permutation of S (InvalidInput).
PropagationTrace propagation_certifier(const CirculantGraph& graph,
                                       std::optional<std::vector<Residue>> order = {});

/// True iff p(x + <S'>) is a coset of <S'> for every x.
bool coset_image_check(const CirculantGraph& graph, const Permutation& p,
                       const std::vector<Residue>& subset);

}  // namespace circaut
