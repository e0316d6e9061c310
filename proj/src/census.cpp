#include "plethys/census.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "parallel.hpp"
#include "plethys/errors.hpp"

namespace plethys {

namespace {

inline std::size_t at(int i) { return static_cast<std::size_t>(i); }

constexpr int kOpen = -2;  // placeholder leg label for a half-edge still to be paired

using Mask = unsigned;

std::vector<int> labels_of(Mask mask) {
  std::vector<int> out;
  for (int bit = 0; bit < 32; ++bit) {
    if (mask & (1u << bit)) out.push_back(bit + 1);
  }
  return out;
}

/// Unordered set partitions of `mask` into at least `min_blocks` blocks.
std::vector<std::vector<Mask>> set_partitions(Mask mask, std::size_t min_blocks) {
  const auto labels = labels_of(mask);
  std::vector<std::vector<Mask>> out;
  std::vector<Mask> blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == labels.size()) {
      if (blocks.size() >= min_blocks) out.push_back(blocks);
      return;
    }
    const Mask bit = 1u << (labels[i] - 1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b] |= bit;
      rec(i + 1);
      blocks[b] &= ~bit;
    }
    blocks.push_back(bit);
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
  return out;
}

/// Appends `src` to `dst`; returns the half-edge offset.
int append(DecoratedGraph& dst, const DecoratedGraph& src) {
  const int h_off = dst.graph.num_half_edges();
  const int v_off = dst.graph.num_vertices();
  for (int h = 0; h < src.graph.num_half_edges(); ++h) {
    dst.graph.vertex_of.push_back(src.graph.vertex_of[at(h)] + v_off);
    dst.graph.involution.push_back(src.graph.involution[at(h)] + h_off);
    dst.graph.leg_label.push_back(src.graph.leg_label[at(h)]);
    dst.block.push_back(src.block[at(h)]);
    dst.mark.push_back(src.mark[at(h)]);
  }
  for (int v = 0; v < src.graph.num_vertices(); ++v) {
    dst.graph.genus.push_back(src.graph.genus[at(v)]);
    dst.module.push_back(src.module[at(v)]);
  }
  return h_off;
}

void pair_half_edges(DecoratedGraph& g, int a, int b) {
  g.graph.involution[at(a)] = b;
  g.graph.involution[at(b)] = a;
  g.graph.leg_label[at(a)] = HalfEdgeGraph::kNoLeg;
  g.graph.leg_label[at(b)] = HalfEdgeGraph::kNoLeg;
}

// Ordered set partitions of a vertex's half-edges with block sizes λ, as block
// index sequences.
std::vector<std::vector<int>> tabloids(const Partition& lambda) {
  std::vector<int> seq;
  int block = 0;
  for (int part : lambda.parts()) {
    seq.insert(seq.end(), static_cast<std::size_t>(part), block++);
  }
  std::vector<std::vector<int>> out;
  do {
    out.push_back(seq);
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

class Enumerator {
 public:
  Enumerator(const ModuleSpec& spec, Family family, int n, const Budget& budget)
      : spec_(spec), family_(family), n_(n), budget_(budget), result_(family, n) {}

  IsoClassSet run() {
    const Mask all = n_ >= 32 ? ~0u : (1u << n_) - 1;
    switch (family_) {
      case Family::rooted_tree:
        if (n_ >= 2) {
          for (const auto& tree : fragments(all)) {
            DecoratedGraph g = tree;
            g.graph.leg_label[0] = 0;
            emit(g);
          }
        }
        break;
      case Family::genus1_stable:
        for (const auto& blocks : set_partitions(all, 1)) {
          for (const auto& piece : vertex_pieces(1, 0, blocks)) emit(piece);
        }
        cycles();
        break;
      case Family::necklace:
      case Family::oriented_necklace:
        cycles();
        break;
    }
    return std::move(result_);
  }

 private:
  bool legs_only() const { return family_ != Family::genus1_stable; }

  void check_size(const DecoratedGraph& g) const {
    if (g.graph.num_half_edges() > budget_.max_half_edges) {
      throw BudgetExceeded("enumeration needs graphs with " + std::to_string(g.graph.num_half_edges()) +
                           " half-edges; budget is " + std::to_string(budget_.max_half_edges));
    }
  }

  void emit(const DecoratedGraph& g) {
    check_size(g);
    result_.insert(g);
    if (result_.size() > budget_.max_classes) throw BudgetExceeded("census exceeds class budget");
  }

  // Rooted genus-0 trees on the labels of `mask`; half-edge 0 is the open root.
  const std::vector<DecoratedGraph>& fragments(Mask mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    std::vector<DecoratedGraph> out;
    for (const auto& blocks : set_partitions(mask, 2)) {
      for (auto& piece : vertex_pieces(0, 1, blocks)) {
        check_size(piece);
        out.push_back(std::move(piece));
      }
    }
    return memo_.emplace(mask, std::move(out)).first->second;
  }

  // All decorated vertices of the given genus whose first `open` half-edges are
  // placeholders and whose remaining half-edges carry one attachment per block.
  std::vector<DecoratedGraph> vertex_pieces(int genus, int open, const std::vector<Mask>& blocks) {
    const int valence = open + static_cast<int>(blocks.size());
    const auto& summands = spec_.summands(genus, valence);
    if (summands.empty()) return {};

    std::vector<const std::vector<DecoratedGraph>*> options;
    for (Mask b : blocks) {
      if (std::popcount(b) == 1) {
        options.push_back(nullptr);
      } else {
        options.push_back(&fragments(b));
        if (options.back()->empty()) return {};
      }
    }

    DecoratedGraph base;
    base.graph.genus = {genus};
    base.module = {0};
    for (int h = 0; h < valence; ++h) {
      base.graph.vertex_of.push_back(0);
      base.graph.involution.push_back(h);
      base.graph.leg_label.push_back(h < open ? kOpen : labels_of(blocks[at(h - open)]).front());
      base.block.push_back(0);
      base.mark.push_back(0);
    }

    std::vector<DecoratedGraph> bare;
    std::function<void(std::size_t, const DecoratedGraph&)> attach = [&](std::size_t i, const DecoratedGraph& g) {
      if (i == blocks.size()) {
        bare.push_back(g);
        return;
      }
      if (options[i] == nullptr) {
        attach(i + 1, g);
        return;
      }
      for (const auto& sub : *options[i]) {
        DecoratedGraph next = g;
        const int off = append(next, sub);
        pair_half_edges(next, open + static_cast<int>(i), off);
        attach(i + 1, next);
      }
    };
    attach(0, base);

    std::vector<DecoratedGraph> out;
    for (std::size_t s = 0; s < summands.size(); ++s) {
      const auto decorations = tabloids(summands[s]);
      for (const auto& g : bare) {
        for (const auto& deco : decorations) {
          DecoratedGraph piece = g;
          piece.module[0] = static_cast<int>(s);
          for (int h = 0; h < valence; ++h) piece.block[at(h)] = deco[at(h)];
          out.push_back(std::move(piece));
        }
      }
    }
    return out;
  }

  // Cycles of k genus-0 vertices; leg 1 sits at cycle position 0, which
  // removes the rotational redundancy before canonicalization.
  void cycles() {
    for (int k = 1; k <= n_; ++k) {
      std::vector<int> group(at(n_), 0);
      std::function<void(int)> assign = [&](int label) {
        if (label > n_) {
          std::vector<Mask> masks(at(k), 0);
          for (int l = 1; l <= n_; ++l) masks[at(group[at(l - 1)])] |= 1u << (l - 1);
          if (std::none_of(masks.begin(), masks.end(), [](Mask m) { return m == 0; })) build_cycle(masks);
          return;
        }
        const int groups = label == 1 ? 1 : k;
        for (int g = 0; g < groups; ++g) {
          group[at(label - 1)] = g;
          assign(label + 1);
        }
      };
      assign(1);
    }
  }

  void build_cycle(const std::vector<Mask>& groups) {
    std::vector<std::vector<DecoratedGraph>> per_vertex;
    for (Mask m : groups) {
      std::vector<DecoratedGraph> pieces;
      const auto partitions = legs_only() ? std::vector<std::vector<Mask>>{singletons(m)} : set_partitions(m, 1);
      for (const auto& blocks : partitions) {
        for (auto& p : vertex_pieces(0, 2, blocks)) pieces.push_back(std::move(p));
      }
      if (pieces.empty()) return;
      per_vertex.push_back(std::move(pieces));
    }
    const int k = static_cast<int>(groups.size());
    const bool oriented = family_ == Family::oriented_necklace;
    std::vector<const DecoratedGraph*> chosen(at(k));
    std::function<void(int)> choose = [&](int i) {
      if (i == k) {
        DecoratedGraph g;
        std::vector<int> offsets;
        for (const auto* p : chosen) offsets.push_back(append(g, *p));
        for (int j = 0; j < k; ++j) {
          const int forward = offsets[at(j)];
          const int backward = offsets[at((j + 1) % k)] + 1;
          pair_half_edges(g, forward, backward);
          if (oriented) {
            g.mark[at(forward)] = 1;
            g.mark[at(backward)] = 2;
          }
        }
        emit(g);
        return;
      }
      for (const auto& p : per_vertex[at(i)]) {
        chosen[at(i)] = &p;
        choose(i + 1);
      }
    };
    choose(0);
  }

  static std::vector<Mask> singletons(Mask m) {
    std::vector<Mask> out;
    for (int l : labels_of(m)) out.push_back(1u << (l - 1));
    return out;
  }

  const ModuleSpec& spec_;
  Family family_;
  int n_;
  Budget budget_;
  IsoClassSet result_;
  std::map<Mask, std::vector<DecoratedGraph>> memo_;
};

Perm standard_perm(const Partition& lambda) {
  std::vector<int> images;
  int start = 0;
  for (int part : lambda.parts()) {
    for (int i = 0; i < part; ++i) images.push_back(start + (i + 1) % part);
    start += part;
  }
  return Perm(std::move(images));
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::genus1_stable: return "genus1-stable";
    case Family::necklace: return "necklace";
    case Family::oriented_necklace: return "oriented-necklace";
    case Family::rooted_tree: return "rooted-tree";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (auto f : {Family::genus1_stable, Family::necklace, Family::oriented_necklace, Family::rooted_tree}) {
    if (name == to_string(f)) return f;
  }
  return std::nullopt;
}

bool IsoClassSet::insert(const DecoratedGraph& g) {
  auto canon = canonical_form(g);
  return classes_.emplace(std::move(canon.code), std::move(canon.graph)).second;
}

IsoClassSet enumerate_decorated(const ModuleSpec& spec, Family family, int n, const Budget& budget) {
  spec.validate();
  if (n < 1) throw InvalidInput("enumerate_decorated: need at least one leg (n >= 1)");
  if (n > budget.max_legs) {
    throw BudgetExceeded("enumerate_decorated: n = " + std::to_string(n) + " exceeds the leg budget " +
                         std::to_string(budget.max_legs));
  }
  return Enumerator(spec, family, n, budget).run();
}

long fixed_class_count(const IsoClassSet& classes, const Perm& pi) {
  if (pi.is_identity()) return static_cast<long>(classes.size());
  std::vector<const std::pair<const std::vector<int>, DecoratedGraph>*> entries;
  for (const auto& entry : classes.classes()) entries.push_back(&entry);
  return detail::parallel_count(entries.size(), [&](std::size_t i) -> long {
    const auto& [code, graph] = *entries[i];
    return canonical_form(relabel_legs(graph, pi)).code == code ? 1 : 0;
  });
}

SymFunc char_of_census(const IsoClassSet& classes, int truncation) {
  const int n = classes.legs();
  if (n > truncation) throw InvalidInput("char_of_census: leg count exceeds truncation");
  SymFunc out(truncation);
  for (const auto& lambda : partitions_of(n)) {
    const long fix = fixed_class_count(classes, standard_perm(lambda));
    out.add_term(lambda, make_rat(BigInt(fix), z_of(lambda)));
  }
  return out;
}

SymFunc mv_char(const ModuleSpec& spec, int n, int truncation, const Budget& budget) {
  return char_of_census(enumerate_decorated(spec, Family::genus1_stable, n, budget), truncation);
}

SymFunc necklace_char_oracle(const ModuleSpec& spec, int n, int truncation, const Budget& budget) {
  return char_of_census(enumerate_decorated(spec, Family::necklace, n, budget), truncation);
}

SymFunc cyclic_necklace_char_oracle(const ModuleSpec& spec, int n, int truncation, const Budget& budget) {
  return char_of_census(enumerate_decorated(spec, Family::oriented_necklace, n, budget), truncation);
}

SymFunc tree_char_oracle(const ModuleSpec& spec, int n, int truncation, const Budget& budget) {
  return char_of_census(enumerate_decorated(spec, Family::rooted_tree, n, budget), truncation);
}

SymFunc oracle_series(const ModuleSpec& spec, Family family, int truncation, const Budget& budget) {
  SymFunc out(truncation);
  for (int n = 1; n <= truncation; ++n) {
    out += char_of_census(enumerate_decorated(spec, family, n, budget), truncation);
  }
  return out;
}

SymFunc hom_char(const GroupElements<Perm>& k_group, const Partition& mu, int truncation) {
  const int k = k_group.degree();
  const int total = mu.weight();
  const int m = total - k;
  if (m < 0) throw InvalidInput("hom_char: shape is smaller than the restricted group's degree");
  if (m > truncation) throw InvalidInput("hom_char: remaining degree exceeds truncation");
  const auto xs = tabloids(mu);
  SymFunc out(truncation);
  for (const auto& lambda : partitions_of(m)) {
    const Perm pi = standard_perm(lambda);
    long fixed = 0;
    for (const auto& kappa : k_group.elements()) {
      std::vector<int> rho(at(total));
      for (int i = 0; i < k; ++i) rho[at(i)] = kappa.image(i);
      for (int i = 0; i < m; ++i) rho[at(k + i)] = k + pi.image(i);
      for (const auto& t : xs) {
        bool fix = true;
        for (int i = 0; i < total && fix; ++i) fix = t[at(rho[at(i)])] == t[at(i)];
        fixed += fix ? 1 : 0;
      }
    }
    out.add_term(lambda, make_rat(BigInt(fixed), z_of(lambda) * static_cast<long>(k_group.order())));
  }
  return out;
}

}  // namespace plethys
