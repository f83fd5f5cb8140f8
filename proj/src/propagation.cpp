#include <algorithm>

#include "circaut/error.hpp"
#include "circaut/solver.hpp"

namespace circaut {

namespace {

using Bits = std::vector<char>;

std::vector<Residue> members(const Bits& bits) {
  std::vector<Residue> out;
  for (std::size_t x = 0; x < bits.size(); ++x) {
    if (bits[x]) out.push_back(static_cast<Residue>(x));
  }
  return out;
}

// T + step is contained in T
bool closed_under(const Bits& bits, Residue step) {
  const auto n = static_cast<Residue>(bits.size());
  for (Residue x = 0; x < n; ++x) {
    if (bits[x] && !bits[mod(x + step, n)]) return false;
  }
  return true;
}

}  // namespace

int PropagationTrace::total_rounds() const {
  int total = 0;
  for (const auto& stage : stages) total += static_cast<int>(stage.rounds.size());
  return total;
}

PropagationTrace propagation_certifier(const CirculantGraph& graph,
                                       std::optional<std::vector<Residue>> order) {
  const Residue n = graph.n();
  const auto& S = graph.connection_set().elements();
  PropagationTrace trace;
  trace.n = n;
  if (order) {
    auto sorted = *order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != S) throw InvalidInput("generator order must be a permutation of S");
    trace.order = std::move(*order);
  } else {
    trace.order = S;
  }
  const auto& gens = trace.order;

  Bits fixed(n, 0);
  for (Residue x : cyclic_subgroup(n, gens[0])) fixed[x] = 1;

  for (std::size_t k = 1; k < gens.size(); ++k) {
    PropagationStage stage;
    stage.k = static_cast<int>(k);
    const Residue next = gens[k];
    stage.next_generator = next;
    std::span<const Residue> prefix(gens.data(), k);
    stage.base_order = n / gcd_with(n, prefix);
    stage.generator_order = order_mod(n, next);
    stage.d = gcd(stage.base_order, stage.generator_order);
    const Residue coset_step = n / stage.d;

    for (Residue x : cyclic_subgroup(n, next)) fixed[x] = 1;
    stage.initial = members(fixed);
    if (!closed_under(fixed, coset_step)) trace.invariant_held = false;

    while (true) {
      PropagationRound round;
      Bits grown = fixed;
      for (Residue x = 0; x < n; ++x) {
        if (!fixed[mod(x - next, n)]) continue;
        bool via_base = std::any_of(prefix.begin(), prefix.end(),
                                    [&](Residue s) { return fixed[mod(x - s, n)] != 0; });
        if (!via_base) continue;
        round.matched.push_back(x);
        if (!fixed[x]) {
          round.added.push_back(x);
          grown[x] = 1;
        }
      }
      if (round.added.empty()) break;
      fixed = std::move(grown);
      round.coset_union = closed_under(fixed, coset_step);
      if (!round.coset_union) trace.invariant_held = false;
      stage.rounds.push_back(std::move(round));
    }

    stage.final_set = members(fixed);
    std::span<const Residue> through_next(gens.data(), k + 1);
    stage.reached_subgroup = stage.final_set == cyclic_subgroup(n, gcd_with(n, through_next));
    trace.stages.push_back(std::move(stage));
  }

  trace.final_set = members(fixed);
  trace.covered = static_cast<Residue>(trace.final_set.size()) == n;
  return trace;
}

}  // namespace circaut
