#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "circaut/circulant.hpp"

namespace circaut {

/// A bijection of {0, ..., n-1}, stored as its image array.
class Permutation {
 public:
  /// Throws InvalidInput unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Vertex> images);

  static Permutation identity(int n);
  /// v -> v + shift (mod n).
  static Permutation rotation(int n, Residue shift);

  int degree() const { return static_cast<int>(images_.size()); }
  Vertex operator()(Vertex v) const { return images_[v]; }
  const std::vector<Vertex>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  /// `[p(0), p(1), ..., p(n-1)]`
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Vertex> images_;
};

/// Inverse of to_string; whitespace-insensitive.
Permutation parse_permutation(std::string_view text);

/// (p . q)(v) = p(q(v)): q is applied first.
Permutation compose(const Permutation& p, const Permutation& q);

/// v -> j*v mod n. Throws DomainError when gcd(j, n) != 1.
Permutation multiplier_perm(Residue n, Residue j);

/// True iff p maps the arc (edge) set of the graph onto itself.
bool is_automorphism(const CirculantGraph& graph, const Permutation& p);

/// True iff p permutes the parts of `partition` among themselves. The
/// predicate is only defined for automorphisms of `graph`; anything else
/// raises DomainError. `partition` must have been built from `graph`.
bool respects(const CirculantGraph& graph, const Permutation& p,
              const ArcPartition& partition);

/// respects() without the automorphism precondition check, for callers that
/// already established it.
bool respects_unchecked(const CirculantGraph& graph, const Permutation& p,
                        const ArcPartition& partition);

}  // namespace circaut
