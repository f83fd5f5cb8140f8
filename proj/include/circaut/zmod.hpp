#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace circaut {

using Residue = std::int64_t;

enum class Mode { Directed, Undirected };

struct PrimePower {
  Residue prime;
  int exponent;
  Residue power;  // prime^exponent

  bool operator==(const PrimePower&) const = default;
};

/// The order n of Z_n together with its prime factorization.
class Modulus {
 public:
  explicit Modulus(Residue n);

  Residue value() const { return n_; }
  const std::vector<PrimePower>& factors() const { return factors_; }

 private:
  Residue n_;
  std::vector<PrimePower> factors_;
};

/// One congruence j = residue (mod modulus) per prime power of n, and the
/// CRT combination of them.
struct MultiplierWitness {
  struct Congruence {
    Residue prime;
    Residue modulus;  // prime power p^e exactly dividing n
    Residue residue;
    Residue generator;  // element of S used to solve for the residue

    bool operator==(const Congruence&) const = default;
  };
  Residue n = 0;
  std::vector<Congruence> residues;
  Residue combined = 0;

  bool operator==(const MultiplierWitness&) const = default;
};

Residue mod(Residue a, Residue n);
Residue gcd(Residue a, Residue b);

/// gcd(n, s_1, ..., s_k); gcd(n) of an empty set is n.
Residue gcd_with(Residue n, std::span<const Residue> elements);

/// Multiplicative inverse of a mod n. Throws DomainError when gcd(a, n) != 1.
Residue inverse_mod(Residue a, Residue n);

/// n / gcd(n, s), with gcd(n, 0) = n.
Residue order_mod(Residue n, Residue s);

/// {0, s, 2s, ...} reduced mod n, ascending.
std::vector<Residue> cyclic_subgroup(Residue n, Residue s);

/// Unique x mod prod(m_i) with x = r_i (mod m_i). Congruences are
/// (residue, modulus) pairs. Throws InvalidInput for non-coprime moduli.
std::pair<Residue, Residue> crt_combine(
    std::span<const std::pair<Residue, Residue>> congruences);

bool is_unit(Residue j, Residue n);

/// Aut(Z_n; S): units j with j*S = S, ascending. Elements must already be
/// valid for the mode (see ConnectionSet).
std::vector<Residue> multipliers(Residue n, std::span<const Residue> elements,
                                 Mode mode);

}  // namespace circaut
