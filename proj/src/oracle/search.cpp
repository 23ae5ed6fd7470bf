#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include "degpow/oracle/oracle.hpp"

namespace degpow::oracle {

namespace {

using Mask = unsigned;

bool extend_clique(const SmallGraph& g, Mask candidates, int needed) {
  if (needed == 0) return true;
  if (std::popcount(candidates) < needed) return false;
  while (candidates != 0) {
    const int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    // Only later vertices, so each clique is explored once.
    if (extend_clique(g, candidates & g.row(v), needed - 1)) return true;
    if (std::popcount(candidates) < needed) return false;
  }
  return false;
}

struct Embedding {
  const SmallGraph& host;
  const SmallGraph& pattern;
  std::vector<int> order;
  std::vector<int> image;

  bool extend(std::size_t depth, Mask used) {
    if (depth == order.size()) return true;
    const int hv = order[depth];
    Mask candidates = ((1u << host.order()) - 1) & ~used;
    for (std::size_t k = 0; k < depth; ++k) {
      if (pattern.has_edge(hv, order[k])) candidates &= host.row(image[order[k]]);
    }
    const int need = pattern.degree(hv);
    while (candidates != 0) {
      const int gv = std::countr_zero(candidates);
      candidates &= candidates - 1;
      if (host.degree(gv) < need) continue;
      image[hv] = gv;
      if (extend(depth + 1, used | (1u << gv))) return true;
    }
    return false;
  }
};

// Pattern vertices ordered so each one has as many earlier neighbours as
// possible, which keeps the candidate sets small.
std::vector<int> embedding_order(const SmallGraph& h) {
  std::vector<int> order;
  std::vector<bool> placed(h.order(), false);
  for (int step = 0; step < h.order(); ++step) {
    int best = -1;
    int best_links = -1;
    for (int v = 0; v < h.order(); ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (int u : order) links += h.has_edge(u, v);
      if (links > best_links || (links == best_links && h.degree(v) > h.degree(best))) {
        best = v;
        best_links = links;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }
  return order;
}

struct ColoringSearch {
  const SmallGraph& g;
  std::vector<int> color;
  int best;

  int saturation(int v) const {
    Mask seen = 0;
    for (int u = 0; u < g.order(); ++u)
      if (g.has_edge(u, v) && color[u] >= 0) seen |= 1u << color[u];
    return std::popcount(seen);
  }

  void search(int colored, int used) {
    if (used >= best) return;
    if (colored == g.order()) {
      best = used;
      return;
    }
    int pick = -1;
    int pick_sat = -1;
    for (int v = 0; v < g.order(); ++v) {
      if (color[v] >= 0) continue;
      const int sat = saturation(v);
      if (sat > pick_sat || (sat == pick_sat && g.degree(v) > g.degree(pick))) {
        pick = v;
        pick_sat = sat;
      }
    }
    for (int c = 0; c <= used; ++c) {
      bool clash = false;
      for (int u = 0; u < g.order() && !clash; ++u) clash = g.has_edge(u, pick) && color[u] == c;
      if (clash) continue;
      color[pick] = c;
      search(colored + 1, std::max(used, c + 1));
      color[pick] = -1;
    }
  }
};

} // namespace

bool contains_clique(const SmallGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("clique size must be positive");
  if (k > g.order()) return false;
  return extend_clique(g, (1u << g.order()) - 1, k);
}

bool contains_subgraph(const SmallGraph& g, const SmallGraph& h) {
  if (h.order() > g.order() || h.edge_count() > g.edge_count()) return false;
  auto gd = g.degrees();
  auto hd = h.degrees();
  std::sort(gd.rbegin(), gd.rend());
  std::sort(hd.rbegin(), hd.rend());
  for (std::size_t i = 0; i < hd.size(); ++i)
    if (hd[i] > gd[i]) return false;
  Embedding e{g, h, embedding_order(h), std::vector<int>(h.order(), -1)};
  return e.extend(0, 0);
}

int chromatic_number(const SmallGraph& h) {
  ColoringSearch s{h, std::vector<int>(h.order(), -1), h.order() + 1};
  s.search(0, 0);
  return s.best;
}

std::optional<ClassAssignment> erdos_majorization_witness(const SmallGraph& g, int r) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (contains_clique(g, r + 1))
    throw std::invalid_argument("graph contains K_{r+1}; majorization does not apply");
  const int n = g.order();
  ClassAssignment out;
  out.class_of.assign(n, -1);
  std::vector<int> size;
  std::vector<int> capacity;

  // Restricted-growth assignment: vertex v may open class `used` at most.
  auto place = [&](auto&& self, int v, int used) -> bool {
    if (v == n) {
      out.classes = used;
      return true;
    }
    const int room = n - g.degree(v);
    for (int c = 0; c <= used && c < r; ++c) {
      if (c == used) {
        size.push_back(0);
        capacity.push_back(n);
      }
      const int new_cap = std::min(capacity[c], room);
      if (size[c] + 1 <= new_cap) {
        const int old_cap = capacity[c];
        ++size[c];
        capacity[c] = new_cap;
        out.class_of[v] = c;
        if (self(self, v + 1, std::max(used, c + 1))) return true;
        --size[c];
        capacity[c] = old_cap;
      }
      if (c == used) {
        size.pop_back();
        capacity.pop_back();
      }
    }
    return false;
  };
  if (!place(place, 0, 0)) return std::nullopt;
  return out;
}

ClassSizes ClassAssignment::sizes() const {
  std::vector<int> counts(classes, 0);
  for (int c : class_of) ++counts[c];
  std::erase(counts, 0);
  return ClassSizes::from_unsorted(std::move(counts));
}

} // namespace degpow::oracle
