#include <algorithm>
#include <deque>

#include "circaut/error.hpp"
#include "circaut/solver.hpp"

namespace circaut {

std::vector<Vertex> search_order(const CirculantGraph& graph) {
  const int n = graph.n();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::deque<Vertex> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      order.push_back(v);
      auto visit = [&](const std::vector<Vertex>& list) {
        for (Vertex w : list) {
          if (!seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
          }
        }
      };
      visit(graph.out_neighbors(v));
      if (graph.directed()) visit(graph.in_neighbors(v));
    }
  }
  return order;
}

namespace {

class Backtracker {
 public:
  Backtracker(const CirculantGraph& graph, const ArcPartition& partition,
              const SearchConfig& cfg)
      : graph_(graph),
        partition_(partition),
        cfg_(cfg),
        order_(search_order(graph)),
        image_(graph.n(), -1),
        used_(graph.n(), 0),
        forward_(partition.parts().size(), -1),
        backward_(partition.parts().size(), -1) {}

  std::vector<Permutation> run() {
    extend(0);
    std::sort(results_.begin(), results_.end());
    return std::move(results_);
  }

 private:
  // Records that part(arc) maps to part(image_arc).
  bool link(int arc, int image_arc) {
    const int from = partition_.part_of(arc);
    const int to = partition_.part_of(image_arc);
    if (forward_[from] == -1 && backward_[to] == -1) {
      if (partition_.parts()[from].arcs.size() != partition_.parts()[to].arcs.size()) {
        return false;
      }
      forward_[from] = to;
      backward_[to] = from;
      log_.push_back(from);
      return true;
    }
    return forward_[from] == to;
  }

  bool pair_ok(Vertex x, Vertex y, Vertex px, Vertex py) {
    const int a = graph_.arc_id(x, y);
    const int b = graph_.arc_id(px, py);
    if ((a >= 0) != (b >= 0)) return false;
    return a < 0 || link(a, b);
  }

  bool consistent(std::size_t pos, Vertex v, Vertex w) {
    for (std::size_t i = 0; i < pos; ++i) {
      const Vertex u = order_[i];
      const Vertex pu = image_[u];
      if (!pair_ok(u, v, pu, w)) return false;
      if (graph_.directed() && !pair_ok(v, u, w, pu)) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (log_.size() > mark) {
      const int from = log_.back();
      log_.pop_back();
      backward_[forward_[from]] = -1;
      forward_[from] = -1;
    }
  }

  void extend(std::size_t pos) {
    const int n = graph_.n();
    if (pos == order_.size()) {
      Permutation p(image_);
      if (respects_unchecked(graph_, p, partition_)) {
        results_.push_back(std::move(p));
        if (cfg_.max_solutions && results_.size() > *cfg_.max_solutions) {
          throw ResourceError("more than " + std::to_string(*cfg_.max_solutions) +
                              " respecting automorphisms");
        }
      }
      return;
    }
    const Vertex v = order_[pos];
    for (Vertex w = 0; w < n; ++w) {
      if (used_[w]) continue;
      if (cfg_.fix_zero && (v == 0) != (w == 0)) continue;
      const std::size_t mark = log_.size();
      if (consistent(pos, v, w)) {
        image_[v] = w;
        used_[w] = 1;
        extend(pos + 1);
        used_[w] = 0;
        image_[v] = -1;
      }
      undo(mark);
    }
  }

  const CirculantGraph& graph_;
  const ArcPartition& partition_;
  const SearchConfig& cfg_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
  std::vector<int> forward_;
  std::vector<int> backward_;
  std::vector<int> log_;
  std::vector<Permutation> results_;
};

void check_partition(const CirculantGraph& graph, const ArcPartition& partition) {
  if (!belongs_to(partition, graph)) {
    throw InvalidInput("partition does not belong to this graph");
  }
}

}  // namespace

std::vector<Permutation> enumerate_respecting(const CirculantGraph& graph,
                                              const ArcPartition& partition,
                                              const SearchConfig& cfg) {
  check_partition(graph, partition);
  if (cfg.oracle_mode) {
    auto found = brute_oracle(graph, partition, cfg.fix_zero, cfg.oracle_limit);
    if (cfg.max_solutions && found.size() > *cfg.max_solutions) {
      throw ResourceError("more than " + std::to_string(*cfg.max_solutions) +
                          " respecting automorphisms");
    }
    return found;
  }
  if (graph.n() > cfg.max_n) {
    throw ResourceError("n = " + std::to_string(graph.n()) + " exceeds enumerator cap " +
                        std::to_string(cfg.max_n));
  }
  return Backtracker(graph, partition, cfg).run();
}

std::vector<Permutation> brute_oracle(const CirculantGraph& graph,
                                      const ArcPartition& partition, bool fix_zero,
                                      int oracle_limit) {
  check_partition(graph, partition);
  if (graph.n() > oracle_limit) {
    throw ResourceError("n = " + std::to_string(graph.n()) + " exceeds oracle limit " +
                        std::to_string(oracle_limit));
  }
  std::vector<Vertex> images(graph.n());
  for (int v = 0; v < graph.n(); ++v) images[v] = v;
  auto first = fix_zero ? images.begin() + 1 : images.begin();
  std::vector<Permutation> out;
  do {
    Permutation p(images);
    if (is_automorphism(graph, p) && respects_unchecked(graph, p, partition)) {
      out.push_back(std::move(p));
    }
  } while (std::next_permutation(first, images.end()));
  return out;
}

}  // namespace circaut
