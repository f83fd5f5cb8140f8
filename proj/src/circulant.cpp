#include "circaut/circulant.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <map>
#include <sstream>

#include "circaut/error.hpp"

namespace circaut {

ConnectionSet::ConnectionSet(Residue n, std::vector<Residue> elements, Mode mode)
    : n_(n), elements_(std::move(elements)), mode_(mode) {
  if (n_ < 2) throw InvalidInput("circulant order must be at least 2");
  if (elements_.empty()) throw InvalidInput("connection set is empty");
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw InvalidInput("connection set has duplicate elements");
  }
  for (Residue s : elements_) {
    if (s == 0) throw InvalidInput("connection set contains 0");
    if (s < 1 || s >= n_) {
      throw InvalidInput("element " + std::to_string(s) + " outside [1, " +
                         std::to_string(n_ - 1) + "]");
    }
  }
  if (mode_ == Mode::Undirected) {
    for (Residue s : elements_) {
      if (!contains(n_ - s)) {
        throw InvalidInput("undirected connection set is not inverse-closed: " +
                           std::to_string(s) + " present but " + std::to_string(n_ - s) +
                           " missing");
      }
    }
  }
}

ConnectionSet ConnectionSet::closed_under_inverse(Residue n, std::vector<Residue> elements,
                                                  Mode mode) {
  if (mode == Mode::Undirected) {
    std::size_t count = elements.size();
    for (std::size_t i = 0; i < count; ++i) {
      Residue neg = n - elements[i];
      if (elements[i] >= 1 && elements[i] < n &&
          std::find(elements.begin(), elements.end(), neg) == elements.end()) {
        elements.push_back(neg);
      }
    }
  }
  return ConnectionSet(n, std::move(elements), mode);
}

bool ConnectionSet::contains(Residue s) const {
  return std::binary_search(elements_.begin(), elements_.end(), s);
}

char mode_letter(Mode mode) { return mode == Mode::Directed ? 'd' : 'u'; }

std::string ConnectionSet::to_string() const {
  std::ostringstream os;
  os << n_ << ':';
  for (std::size_t i = 0; i < elements_.size(); ++i) os << (i ? "," : "") << elements_[i];
  os << ':' << mode_letter(mode_);
  return os.str();
}

namespace {

Residue parse_integer(std::string_view token, std::string_view whole) {
  Residue value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw InvalidInput("bad integer '" + std::string(token) + "' in instance '" +
                       std::string(whole) + "'");
  }
  return value;
}

}  // namespace

ConnectionSet parse_instance(std::string_view text, bool close_inverse) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  std::vector<std::string_view> fields;
  std::string_view rest = compact;
  while (true) {
    auto pos = rest.find(':');
    fields.push_back(rest.substr(0, pos));
    if (pos == std::string_view::npos) break;
    rest.remove_prefix(pos + 1);
  }
  if (fields.size() < 2 || fields.size() > 3) {
    throw InvalidInput("instance must look like n:s1,s2,...[:d|:u], got '" +
                       std::string(text) + "'");
  }
  Mode mode = Mode::Directed;
  if (fields.size() == 3) {
    if (fields[2] == "d") {
      mode = Mode::Directed;
    } else if (fields[2] == "u") {
      mode = Mode::Undirected;
    } else {
      throw InvalidInput("mode suffix must be 'd' or 'u', got '" + std::string(fields[2]) + "'");
    }
  }
  Residue n = parse_integer(fields[0], text);
  std::vector<Residue> elements;
  std::string_view list = fields[1];
  while (!list.empty()) {
    auto pos = list.find(',');
    elements.push_back(parse_integer(list.substr(0, pos), text));
    if (pos == std::string_view::npos) break;
    list.remove_prefix(pos + 1);
    if (list.empty()) throw InvalidInput("trailing comma in instance '" + std::string(text) + "'");
  }
  if (close_inverse) return ConnectionSet::closed_under_inverse(n, std::move(elements), mode);
  return ConnectionSet(n, std::move(elements), mode);
}

CirculantGraph::CirculantGraph(ConnectionSet cs)
    : cs_(std::move(cs)), n_(static_cast<int>(cs_.n())) {
  const auto& S = cs_.elements();
  std::map<std::pair<Vertex, Vertex>, std::vector<Residue>> found;
  for (Vertex g = 0; g < n_; ++g) {
    for (Residue s : S) {
      Vertex h = static_cast<Vertex>(mod(g + s, n_));
      auto key = directed() ? std::pair{g, h} : std::pair{std::min(g, h), std::max(g, h)};
      auto& gens = found[key];
      if (std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
    }
  }
  ids_.assign(static_cast<std::size_t>(n_) * n_, -1);
  arcs_.reserve(found.size());
  for (auto& [key, gens] : found) {
    std::sort(gens.begin(), gens.end());
    int id = static_cast<int>(arcs_.size());
    arcs_.push_back({key.first, key.second, std::move(gens)});
    ids_[static_cast<std::size_t>(key.first) * n_ + key.second] = id;
    if (!directed()) ids_[static_cast<std::size_t>(key.second) * n_ + key.first] = id;
  }
  out_.resize(n_);
  in_.resize(n_);
  for (Vertex v = 0; v < n_; ++v) {
    for (Residue s : S) {
      out_[v].push_back(static_cast<Vertex>(mod(v + s, n_)));
      in_[v].push_back(static_cast<Vertex>(mod(v - s, n_)));
    }
  }
}

CirculantGraph build(Residue n, std::vector<Residue> elements, Mode mode) {
  return CirculantGraph(ConnectionSet(n, std::move(elements), mode));
}

bool is_connected(const CirculantGraph& graph) {
  return gcd_with(graph.n(), graph.connection_set().elements()) == 1;
}

bool is_connected_bfs(const CirculantGraph& graph) {
  std::vector<char> seen(graph.n(), 0);
  std::deque<Vertex> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (const auto* list : {&graph.out_neighbors(v), &graph.in_neighbors(v)}) {
      for (Vertex w : *list) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          queue.push_back(w);
        }
      }
    }
  }
  return reached == graph.n();
}

char kind_letter(PartitionKind kind) { return kind == PartitionKind::B ? 'B' : 'C'; }

ArcPartition::ArcPartition(PartitionKind kind, std::vector<Part> parts,
                           std::vector<std::pair<Vertex, Vertex>> endpoints)
    : kind_(kind),
      parts_(std::move(parts)),
      part_of_(endpoints.size(), -1),
      endpoints_(std::move(endpoints)) {
  for (std::size_t p = 0; p < parts_.size(); ++p) {
    for (int a : parts_[p].arcs) {
      if (a < 0 || a >= static_cast<int>(part_of_.size()) || part_of_[a] != -1) {
        throw InvalidInput("parts overlap or reference unknown arcs");
      }
      part_of_[a] = static_cast<int>(p);
    }
  }
  if (std::find(part_of_.begin(), part_of_.end(), -1) != part_of_.end()) {
    throw InvalidInput("parts do not cover every arc");
  }
}

namespace {

std::vector<std::pair<Vertex, Vertex>> endpoints_of(const CirculantGraph& graph) {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(graph.arcs().size());
  for (const Arc& a : graph.arcs()) out.emplace_back(a.tail, a.head);
  return out;
}

// Arcs (g, g + s) for g in `tails`, as sorted unique ids.
std::vector<int> arcs_from(const CirculantGraph& graph, Residue s,
                           const std::vector<Residue>& tails) {
  std::vector<int> ids;
  ids.reserve(tails.size());
  for (Residue g : tails) {
    ids.push_back(graph.arc_id(static_cast<Vertex>(g),
                               static_cast<Vertex>(mod(g + s, graph.n()))));
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

// Identical arc sets (from s and n - s in undirected mode) collapse into one
// part carrying both generators.
void add_part(std::vector<Part>& parts, Part part) {
  for (Part& existing : parts) {
    if (existing.arcs == part.arcs) {
      for (Residue s : part.generators) existing.generators.push_back(s);
      std::sort(existing.generators.begin(), existing.generators.end());
      return;
    }
  }
  parts.push_back(std::move(part));
}

}  // namespace

bool belongs_to(const ArcPartition& partition, const CirculantGraph& graph) {
  const auto& ends = partition.endpoints();
  if (ends.size() != graph.arcs().size()) return false;
  for (std::size_t a = 0; a < ends.size(); ++a) {
    if (ends[a].first != graph.arcs()[a].tail || ends[a].second != graph.arcs()[a].head) {
      return false;
    }
  }
  return true;
}

ArcPartition partition_B(const CirculantGraph& graph) {
  std::vector<Residue> all(graph.n());
  for (int g = 0; g < graph.n(); ++g) all[g] = g;
  std::vector<Part> parts;
  for (Residue s : graph.connection_set().elements()) {
    add_part(parts, Part{arcs_from(graph, s, all), {s}, std::nullopt});
  }
  return ArcPartition(PartitionKind::B, std::move(parts), endpoints_of(graph));
}

ArcPartition partition_C(const CirculantGraph& graph) {
  const Residue n = graph.n();
  std::vector<Part> parts;
  for (Residue s : graph.connection_set().elements()) {
    const auto subgroup = cyclic_subgroup(n, s);
    const Residue cosets = n / static_cast<Residue>(subgroup.size());
    for (Residue rep = 0; rep < cosets; ++rep) {
      std::vector<Residue> coset;
      coset.reserve(subgroup.size());
      for (Residue h : subgroup) coset.push_back(rep + h);
      add_part(parts, Part{arcs_from(graph, s, coset), {s}, rep});
    }
  }
  return ArcPartition(PartitionKind::C, std::move(parts), endpoints_of(graph));
}

ArcPartition make_partition(const CirculantGraph& graph, PartitionKind kind) {
  return kind == PartitionKind::B ? partition_B(graph) : partition_C(graph);
}

bool refines(const ArcPartition& fine, const ArcPartition& coarse) {
  if (fine.endpoints() != coarse.endpoints()) {
    throw InvalidInput("partitions are over different arc sets");
  }
  for (const Part& part : fine.parts()) {
    int home = coarse.part_of(part.arcs.front());
    for (int a : part.arcs) {
      if (coarse.part_of(a) != home) return false;
    }
  }
  return true;
}

}  // namespace circaut
