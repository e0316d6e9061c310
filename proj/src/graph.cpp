#include "plethys/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include <json.hpp>

namespace plethys {

namespace {
inline std::size_t at(int i) { return static_cast<std::size_t>(i); }
}  // namespace

int HalfEdgeGraph::num_edges() const { return (num_half_edges() - num_legs()) / 2; }

int HalfEdgeGraph::num_legs() const {
  int legs = 0;
  for (int h = 0; h < num_half_edges(); ++h) legs += is_leg(h) ? 1 : 0;
  return legs;
}

int HalfEdgeGraph::valence(int v) const {
  return static_cast<int>(std::count(vertex_of.begin(), vertex_of.end(), v));
}

std::vector<std::vector<int>> HalfEdgeGraph::half_edges_by_vertex() const {
  std::vector<std::vector<int>> out(genus.size());
  for (int h = 0; h < num_half_edges(); ++h) out[at(vertex_of[at(h)])].push_back(h);
  return out;
}

void HalfEdgeGraph::validate() const {
  const auto n = vertex_of.size();
  if (involution.size() != n || leg_label.size() != n) {
    throw InvalidInput("HalfEdgeGraph: per-half-edge arrays differ in length");
  }
  std::vector<int> count(genus.size(), 0);
  std::set<int> labels;
  for (int h = 0; h < num_half_edges(); ++h) {
    const int v = vertex_of[at(h)];
    const int partner = involution[at(h)];
    if (v < 0 || v >= num_vertices()) throw InvalidInput("HalfEdgeGraph: vertex index out of range");
    if (partner < 0 || partner >= num_half_edges() || involution[at(partner)] != h) {
      throw InvalidInput("HalfEdgeGraph: involution is not an involution");
    }
    ++count[at(v)];
    if (is_leg(h)) {
      if (leg_label[at(h)] < 0 || !labels.insert(leg_label[at(h)]).second) {
        throw InvalidInput("HalfEdgeGraph: legs need distinct nonnegative labels");
      }
    } else if (leg_label[at(h)] != kNoLeg) {
      throw InvalidInput("HalfEdgeGraph: edge half-edge carries a leg label");
    }
  }
  for (int c : count) {
    if (c == 0) throw InvalidInput("HalfEdgeGraph: empty vertex");
  }
}

bool HalfEdgeGraph::is_stable() const {
  for (int v = 0; v < num_vertices(); ++v) {
    const int need = genus[at(v)] == 0 ? 3 : 1;
    if (valence(v) < need) return false;
  }
  return true;
}

namespace {

// Components of the underlying topological graph, optionally ignoring the
// edge through half-edge `skip`.
int count_components(const HalfEdgeGraph& g, int skip) {
  std::vector<int> parent(at(g.num_vertices()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[at(v)] != v) v = parent[at(v)] = parent[at(parent[at(v)])];
    return v;
  };
  int components = g.num_vertices();
  for (int h = 0; h < g.num_half_edges(); ++h) {
    const int partner = g.involution[at(h)];
    if (partner <= h) continue;  // legs, and each edge once
    if (skip >= 0 && (h == skip || partner == skip)) continue;
    const int a = find(g.vertex_of[at(h)]);
    const int b = find(g.vertex_of[at(partner)]);
    if (a != b) {
      parent[at(a)] = b;
      --components;
    }
  }
  return components;
}

}  // namespace

int connected_components(const HalfEdgeGraph& g) { return count_components(g, -1); }

bool is_connected(const HalfEdgeGraph& g) { return connected_components(g) == 1; }

int betti1(const HalfEdgeGraph& g) {
  return g.num_edges() - g.num_vertices() + connected_components(g);
}

bool is_necklace(const HalfEdgeGraph& g) {
  if (!is_connected(g)) throw InvalidInput("is_necklace: graph is disconnected");
  if (betti1(g) != 1) return false;
  for (int h = 0; h < g.num_half_edges(); ++h) {
    const int partner = g.involution[at(h)];
    if (partner <= h) continue;
    if (count_components(g, h) != 1) return false;
  }
  return true;
}

namespace {

// Ranks tuples by value so equal structure gets equal colour regardless of
// how the input happens to number its half-edges.
template <class Tuple>
std::vector<int> rank_by_value(const std::vector<Tuple>& sigs) {
  std::vector<Tuple> sorted = sigs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out(sigs.size());
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[i]) - sorted.begin());
  }
  return out;
}

std::vector<int> refined_colours(const DecoratedGraph& d,
                                 const std::vector<std::vector<int>>& by_vertex) {
  const auto& g = d.graph;
  const int n = g.num_half_edges();
  std::vector<std::vector<int>> initial(at(n));
  for (int h = 0; h < n; ++h) {
    const int v = g.vertex_of[at(h)];
    initial[at(h)] = {g.is_leg(h) ? 0 : 1, g.leg_label[at(h)], d.mark[at(h)], d.block[at(h)],
                      g.genus[at(v)], d.module[at(v)], static_cast<int>(by_vertex[at(v)].size()),
                      g.involution[at(h)] == h ? -1 : (g.vertex_of[at(g.involution[at(h)])] == v ? 1 : 0)};
  }
  auto colour = rank_by_value(initial);
  int distinct = colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
  for (;;) {
    std::vector<std::vector<int>> sigs(at(n));
    for (int h = 0; h < n; ++h) {
      const int v = g.vertex_of[at(h)];
      std::vector<int> siblings;
      for (int s : by_vertex[at(v)]) siblings.push_back(colour[at(s)]);
      std::sort(siblings.begin(), siblings.end());
      auto& sig = sigs[at(h)];
      sig.push_back(colour[at(h)]);
      sig.push_back(colour[at(g.involution[at(h)])]);
      sig.insert(sig.end(), siblings.begin(), siblings.end());
    }
    auto next = rank_by_value(sigs);
    const int next_distinct = next.empty() ? 0 : *std::max_element(next.begin(), next.end()) + 1;
    colour = std::move(next);
    if (next_distinct == distinct) break;
    distinct = next_distinct;
  }
  return colour;
}

class Canonizer {
 public:
  explicit Canonizer(const DecoratedGraph& d)
      : d_(d), g_(d.graph), by_vertex_(g_.half_edges_by_vertex()), colour_(refined_colours(d, by_vertex_)) {
    for (auto& hs : by_vertex_) {
      std::sort(hs.begin(), hs.end(), [&](int a, int b) { return colour_[at(a)] < colour_[at(b)]; });
    }
  }

  CanonicalForm run() {
    if (g_.num_vertices() == 0) return {{0, 0}, d_};
    std::vector<int> starts;
    int best_leg = -1;
    for (int h = 0; h < g_.num_half_edges(); ++h) {
      if (g_.is_leg(h) && (best_leg < 0 || g_.leg_label[at(h)] < g_.leg_label[at(best_leg)])) best_leg = h;
    }
    if (best_leg >= 0) {
      starts.push_back(g_.vertex_of[at(best_leg)]);
    } else {
      // no legs: every vertex is a candidate root
      for (int v = 0; v < g_.num_vertices(); ++v) starts.push_back(v);
    }
    for (int v : starts) {
      seen_.assign(at(g_.num_vertices()), false);
      queue_ = {v};
      seen_[at(v)] = true;
      order_.clear();
      expand(0);
    }
    return {best_code_, materialize(best_order_, best_queue_)};
  }

 private:
  void expand(std::size_t head) {
    if (head == queue_.size()) {
      if (queue_.size() != at(g_.num_vertices())) throw InvalidInput("canonical_form: graph is disconnected");
      auto code = encode(order_, queue_);
      if (best_code_.empty() || code < best_code_) {
        best_code_ = std::move(code);
        best_order_ = order_;
        best_queue_ = queue_;
      }
      return;
    }
    const int v = queue_[head];
    const auto& hs = by_vertex_[at(v)];
    std::vector<int> arrangement = hs;
    arrange(head, arrangement, 0);
  }

  // Permutes each run of equal colours in place, starting at position `from`.
  void arrange(std::size_t head, std::vector<int>& arrangement, std::size_t from) {
    if (from == arrangement.size()) {
      const std::size_t order_mark = order_.size();
      const std::size_t queue_mark = queue_.size();
      for (int h : arrangement) {
        order_.push_back(h);
        const int w = g_.vertex_of[at(g_.involution[at(h)])];
        if (!seen_[at(w)]) {
          seen_[at(w)] = true;
          queue_.push_back(w);
        }
      }
      expand(head + 1);
      for (std::size_t i = queue_mark; i < queue_.size(); ++i) seen_[at(queue_[i])] = false;
      queue_.resize(queue_mark);
      order_.resize(order_mark);
      return;
    }
    std::size_t to = from;
    while (to < arrangement.size() && colour_[at(arrangement[to])] == colour_[at(arrangement[from])]) ++to;
    std::sort(arrangement.begin() + static_cast<long>(from), arrangement.begin() + static_cast<long>(to));
    do {
      arrange(head, arrangement, to);
    } while (std::next_permutation(arrangement.begin() + static_cast<long>(from),
                                   arrangement.begin() + static_cast<long>(to)));
  }

  std::vector<int> encode(const std::vector<int>& order, const std::vector<int>& queue) const {
    std::vector<int> pos(at(g_.num_half_edges()));
    for (std::size_t i = 0; i < order.size(); ++i) pos[at(order[i])] = static_cast<int>(i);
    std::vector<int> code{g_.num_vertices(), g_.num_half_edges()};
    code.reserve(2 + 3 * queue.size() + 4 * order.size());
    std::size_t i = 0;
    for (int v : queue) {
      const auto valence = by_vertex_[at(v)].size();
      code.push_back(g_.genus[at(v)]);
      code.push_back(d_.module[at(v)]);
      code.push_back(static_cast<int>(valence));
      for (std::size_t j = 0; j < valence; ++j, ++i) {
        const int h = order[i];
        code.push_back(g_.leg_label[at(h)]);
        code.push_back(d_.mark[at(h)]);
        code.push_back(d_.block[at(h)]);
        code.push_back(pos[at(g_.involution[at(h)])]);
      }
    }
    return code;
  }

  DecoratedGraph materialize(const std::vector<int>& order, const std::vector<int>& queue) const {
    std::vector<int> pos(at(g_.num_half_edges())), vpos(at(g_.num_vertices()));
    for (std::size_t i = 0; i < order.size(); ++i) pos[at(order[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < queue.size(); ++i) vpos[at(queue[i])] = static_cast<int>(i);
    DecoratedGraph out;
    for (int h : order) {
      out.graph.vertex_of.push_back(vpos[at(g_.vertex_of[at(h)])]);
      out.graph.involution.push_back(pos[at(g_.involution[at(h)])]);
      out.graph.leg_label.push_back(g_.leg_label[at(h)]);
      out.block.push_back(d_.block[at(h)]);
      out.mark.push_back(d_.mark[at(h)]);
    }
    for (int v : queue) {
      out.graph.genus.push_back(g_.genus[at(v)]);
      out.module.push_back(d_.module[at(v)]);
    }
    return out;
  }

  const DecoratedGraph& d_;
  const HalfEdgeGraph& g_;
  std::vector<std::vector<int>> by_vertex_;
  std::vector<int> colour_;

  std::vector<bool> seen_;
  std::vector<int> queue_;
  std::vector<int> order_;

  std::vector<int> best_code_;
  std::vector<int> best_order_;
  std::vector<int> best_queue_;
};

}  // namespace

CanonicalForm canonical_form(const DecoratedGraph& g) { return Canonizer(g).run(); }

DecoratedGraph relabel_half_edges(const DecoratedGraph& g, const Perm& half_edge_perm,
                                  const Perm& vertex_perm) {
  const int n = g.graph.num_half_edges();
  if (half_edge_perm.degree() != n || vertex_perm.degree() != g.graph.num_vertices()) {
    throw InvalidInput("relabel_half_edges: permutation degrees do not match the graph");
  }
  DecoratedGraph out = g;
  for (int h = 0; h < n; ++h) {
    const auto nh = at(half_edge_perm.image(h));
    out.graph.vertex_of[nh] = vertex_perm.image(g.graph.vertex_of[at(h)]);
    out.graph.involution[nh] = half_edge_perm.image(g.graph.involution[at(h)]);
    out.graph.leg_label[nh] = g.graph.leg_label[at(h)];
    out.block[nh] = g.block[at(h)];
    out.mark[nh] = g.mark[at(h)];
  }
  for (int v = 0; v < g.graph.num_vertices(); ++v) {
    out.graph.genus[at(vertex_perm.image(v))] = g.graph.genus[at(v)];
    out.module[at(vertex_perm.image(v))] = g.module[at(v)];
  }
  return out;
}

DecoratedGraph relabel_legs(const DecoratedGraph& g, const Perm& pi) {
  DecoratedGraph out = g;
  for (auto& label : out.graph.leg_label) {
    if (label >= 1) {
      if (label > pi.degree()) throw InvalidInput("relabel_legs: label outside the permutation's range");
      label = pi.image(label - 1) + 1;
    }
  }
  return out;
}

std::string to_json_line(const DecoratedGraph& g) {
  nlohmann::ordered_json j;
  j["vertex_of"] = g.graph.vertex_of;
  j["involution"] = g.graph.involution;
  j["legs"] = g.graph.leg_label;
  j["genus"] = g.graph.genus;
  j["module"] = g.module;
  j["blocks"] = g.block;
  j["marks"] = g.mark;
  return j.dump();
}

}  // namespace plethys
