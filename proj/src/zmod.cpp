#include "circaut/zmod.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "circaut/error.hpp"

namespace circaut {

Modulus::Modulus(Residue n) : n_(n) {
  if (n < 1) throw InvalidInput("modulus must be positive, got " + std::to_string(n));
  Residue rest = n;
  for (Residue p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    PrimePower pp{p, 0, 1};
    while (rest % p == 0) {
      rest /= p;
      ++pp.exponent;
      pp.power *= p;
    }
    factors_.push_back(pp);
  }
  if (rest > 1) factors_.push_back({rest, 1, rest});
}

Residue mod(Residue a, Residue n) {
  Residue r = a % n;
  return r < 0 ? r + n : r;
}

Residue gcd(Residue a, Residue b) { return std::gcd(a, b); }

Residue gcd_with(Residue n, std::span<const Residue> elements) {
  Residue g = n;
  for (Residue s : elements) g = std::gcd(g, s);
  return g;
}

Residue inverse_mod(Residue a, Residue n) {
  // extended Euclid on (a mod n, n)
  Residue old_r = mod(a, n), r = n;
  Residue old_x = 1, x = 0;
  while (r != 0) {
    Residue q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_x -= q * x;
    std::swap(old_x, x);
  }
  if (old_r != 1 && n != 1) {
    throw DomainError(std::to_string(a) + " is not a unit mod " + std::to_string(n));
  }
  return mod(old_x, n);
}

Residue order_mod(Residue n, Residue s) { return n / std::gcd(n, mod(s, n)); }

std::vector<Residue> cyclic_subgroup(Residue n, Residue s) {
  // <s> = <gcd(n, s)>, the multiples of the gcd
  Residue step = std::gcd(n, mod(s, n));
  std::vector<Residue> out;
  out.reserve(static_cast<std::size_t>(n / step));
  for (Residue x = 0; x < n; x += step) out.push_back(x);
  return out;
}

std::pair<Residue, Residue> crt_combine(
    std::span<const std::pair<Residue, Residue>> congruences) {
  Residue x = 0, m = 1;
  for (auto [r, mi] : congruences) {
    if (mi < 1) throw InvalidInput("CRT modulus must be positive");
    if (std::gcd(m, mi) != 1) {
      throw InvalidInput("CRT moduli are not pairwise coprime (invalid factorization input)");
    }
    // x + m*t = r (mod mi)  =>  t = (r - x) * m^{-1} (mod mi)
    Residue t = mod(mod(r - x, mi) * inverse_mod(m, mi), mi);
    x += m * t;
    m *= mi;
    x = mod(x, m);
  }
  return {x, m};
}

bool is_unit(Residue j, Residue n) { return std::gcd(mod(j, n), n) == 1; }

std::vector<Residue> multipliers(Residue n, std::span<const Residue> elements,
                                 Mode /*mode*/) {
  std::vector<Residue> set(elements.begin(), elements.end());
  std::sort(set.begin(), set.end());
  std::vector<Residue> out;
  std::vector<Residue> image(set.size());
  for (Residue j = 1; j < std::max<Residue>(n, 2); ++j) {
    if (!is_unit(j, n)) continue;
    for (std::size_t i = 0; i < set.size(); ++i) image[i] = mod(j * set[i], n);
    std::sort(image.begin(), image.end());
    if (image == set) out.push_back(j);
  }
  return out;
}

}  // namespace circaut
