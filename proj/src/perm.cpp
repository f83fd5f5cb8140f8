#include "circaut/perm.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "circaut/error.hpp"

namespace circaut {

Permutation::Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (Vertex v : images_) {
    if (v < 0 || v >= degree() || hit[v]) {
      throw InvalidInput("image list is not a permutation of 0.." +
                         std::to_string(degree() - 1));
    }
    hit[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<Vertex> images(n);
  for (int v = 0; v < n; ++v) images[v] = v;
  return Permutation(std::move(images));
}

Permutation Permutation::rotation(int n, Residue shift) {
  std::vector<Vertex> images(n);
  for (int v = 0; v < n; ++v) images[v] = static_cast<Vertex>(mod(v + shift, n));
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(images_.size());
  for (int v = 0; v < degree(); ++v) inv[images_[v]] = v;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int v = 0; v < degree(); ++v) {
    if (images_[v] != v) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int v = 0; v < degree(); ++v) os << (v ? ", " : "") << images_[v];
  os << ']';
  return os.str();
}

Permutation parse_permutation(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.size() < 2 || compact.front() != '[' || compact.back() != ']') {
    throw InvalidInput("permutation must look like [p(0), p(1), ...]");
  }
  std::string_view body(compact);
  body = body.substr(1, body.size() - 2);
  std::vector<Vertex> images;
  while (!body.empty()) {
    auto pos = body.find(',');
    auto token = body.substr(0, pos);
    Vertex v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw InvalidInput("bad permutation entry '" + std::string(token) + "'");
    }
    images.push_back(v);
    if (pos == std::string_view::npos) break;
    body.remove_prefix(pos + 1);
  }
  return Permutation(std::move(images));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw InvalidInput("composing permutations of different degree");
  std::vector<Vertex> images(p.degree());
  for (int v = 0; v < p.degree(); ++v) images[v] = p(q(v));
  return Permutation(std::move(images));
}

Permutation multiplier_perm(Residue n, Residue j) {
  if (!is_unit(j, n)) {
    throw DomainError("multiplier " + std::to_string(j) + " is not a unit mod " +
                      std::to_string(n));
  }
  std::vector<Vertex> images(n);
  for (Residue v = 0; v < n; ++v) images[v] = static_cast<Vertex>(mod(j * v, n));
  return Permutation(std::move(images));
}

bool is_automorphism(const CirculantGraph& graph, const Permutation& p) {
  if (p.degree() != graph.n()) throw InvalidInput("permutation degree differs from graph order");
  // arc count is preserved, so mapping arcs into arcs suffices
  for (const Arc& a : graph.arcs()) {
    if (!graph.adjacent(p(a.tail), p(a.head))) return false;
  }
  return true;
}

bool respects_unchecked(const CirculantGraph& graph, const Permutation& p,
                        const ArcPartition& partition) {
  // p is a bijection on arcs, so the image family equals the part family iff
  // every part lands entirely inside one part of the same size
  const auto& parts = partition.parts();
  for (const Part& part : parts) {
    int target = -1;
    for (int a : part.arcs) {
      const auto& [u, v] = partition.endpoints()[a];
      int image = graph.arc_id(p(u), p(v));
      int q = partition.part_of(image);
      if (target == -1) {
        target = q;
      } else if (q != target) {
        return false;
      }
    }
    if (parts[target].arcs.size() != part.arcs.size()) return false;
  }
  return true;
}

bool respects(const CirculantGraph& graph, const Permutation& p,
              const ArcPartition& partition) {
  if (!belongs_to(partition, graph)) {
    throw InvalidInput("partition does not belong to this graph");
  }
  if (!is_automorphism(graph, p)) {
    throw DomainError("respects() is only defined for automorphisms");
  }
  return respects_unchecked(graph, p, partition);
}

}  // namespace circaut
