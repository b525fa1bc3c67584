#ifndef PARALIE_HOMOLOGY_HPP
#define PARALIE_HOMOLOGY_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "paralie/parabolic.hpp"

namespace paralie {

/// Weight with one over each crossed node: the lowest form rho_p.
inline Weight lowest_form(const Parabolic& p) {
  Weight w(p.rs().rank(), Rat(0));
  for (int i : p.crossed0()) w[i] = 1;
  return w;
}

struct HasseEdge {
  int source = 0, target = 0; // vertex indices
  int node = 0;               // 0-based reflection node
};

/// Hasse diagram of a parabolic: the Weyl orbit of rho_p generated by
/// reflecting at strictly positive coefficients, with one canonical
/// (lexicographically least) word per vertex.
struct HasseDiagram {
  std::vector<Weight> vertices;
  std::vector<int> lengths;
  std::vector<std::vector<int>> words; // 0-based node lists, root to vertex
  std::vector<HasseEdge> edges;

  std::vector<int> layer(int k) const {
    std::vector<int> idx;
    for (std::size_t v = 0; v < vertices.size(); ++v)
      if (lengths[v] == k) idx.push_back(static_cast<int>(v));
    return idx;
  }
};

inline HasseDiagram hasse(const Parabolic& p, int max_len) {
  if (max_len < 0) throw std::invalid_argument("max_len must be >= 0");
  const RootSystem& rs = p.rs();
  HasseDiagram h;
  std::map<Weight, int> index;
  Weight root_v = lowest_form(p);
  h.vertices.push_back(root_v);
  h.lengths.push_back(0);
  h.words.push_back({});
  index[root_v] = 0;
  std::vector<int> frontier = {0};
  for (int len = 0; len < max_len && !frontier.empty(); ++len) {
    std::vector<int> next;
    for (int v : frontier) {
      for (int i = 0; i < rs.rank(); ++i) {
        if (h.vertices[v][i] <= 0) continue;
        Weight w = rs.reflect(i, h.vertices[v]);
        auto it = index.find(w);
        int tgt;
        if (it == index.end()) {
          tgt = static_cast<int>(h.vertices.size());
          index[w] = tgt;
          h.vertices.push_back(w);
          h.lengths.push_back(len + 1);
          auto word = h.words[v];
          word.push_back(i);
          h.words.push_back(std::move(word));
          next.push_back(tgt);
        } else {
          tgt = it->second;
          if (h.lengths[tgt] != len + 1)
            throw std::logic_error("hasse: length collision in orbit");
        }
        h.edges.push_back({v, tgt, i});
      }
    }
    frontier = std::move(next);
  }
  return h;
}

/// Affine Weyl action w.lambda = w(lambda+rho) - rho, with the word applied
/// right to left (the deepest Hasse edge acts first).
inline Weight affine_act(const RootSystem& rs, const std::vector<int>& word0,
                         const Weight& lambda) {
  Weight w = lambda + rs.rho();
  for (auto it = word0.rbegin(); it != word0.rend(); ++it) w = rs.reflect(*it, w);
  return w - rs.rho();
}

struct HomologyComponent {
  int degree = 0;
  std::vector<int> word; // 0-based canonical Hasse word
  Weight hw;
};

namespace detail {

inline std::vector<HomologyComponent> homology_irreducible(const Parabolic& p,
                                                           const Weight& lambda,
                                                           int k) {
  const RootSystem& rs = p.rs();
  HasseDiagram h = hasse(p, k);
  std::vector<HomologyComponent> out;
  for (int v : h.layer(k)) {
    HomologyComponent c;
    c.degree = k;
    c.word = h.words[v];
    c.hw = affine_act(rs, c.word, lambda);
    if (!p.is_p_dominant(c.hw))
      throw std::logic_error("homology: non-p-dominant output weight");
    out.push_back(std::move(c));
  }
  // all words reaching a vertex give the same output weight
  std::map<int, Weight> by_vertex;
  auto layer_k = h.layer(k);
  for (std::size_t j = 0; j < layer_k.size(); ++j) by_vertex[layer_k[j]] = out[j].hw;
  for (const auto& e : h.edges) {
    auto it = by_vertex.find(e.target);
    if (it == by_vertex.end()) continue;
    auto word = h.words[e.source];
    word.push_back(e.node);
    if (affine_act(rs, word, lambda) != it->second)
      throw std::logic_error("homology: word-dependent output weight");
  }
  return out;
}

} // namespace detail

/// Kostant BBW: the degree-k homology components of the irreducible
/// representation with highest weight lambda.  Reducible systems follow the
/// external-tensor Kunneth rule, factors enumerated in order.
inline std::vector<HomologyComponent> homology(const Parabolic& p,
                                               const Weight& lambda, int k) {
  const RootSystem& rs = p.rs();
  if (static_cast<int>(lambda.size()) != rs.rank())
    throw std::invalid_argument("weight dimension mismatch");
  for (const auto& c : lambda)
    if (c < 0 || c.get_den() != 1)
      throw std::invalid_argument("homology requires a dominant integral weight");
  if (rs.irreducible()) return detail::homology_irreducible(p, lambda, k);

  // factorwise components, then merge degrees
  std::vector<std::vector<std::vector<HomologyComponent>>> per_factor;
  std::size_t nf = rs.lie_type().size();
  for (std::size_t fi = 0; fi < nf; ++fi) {
    const auto& f = rs.lie_type()[fi];
    int off = rs.factor_offset(static_cast<int>(fi));
    std::set<int> crossed;
    for (int i : p.crossed0())
      if (i >= off && i < off + f.rank) crossed.insert(i - off + 1);
    Parabolic pf(RootSystem({f}), crossed);
    Weight lf(lambda.begin() + off, lambda.begin() + off + f.rank);
    std::vector<std::vector<HomologyComponent>> degs;
    for (int d = 0; d <= k; ++d) degs.push_back(detail::homology_irreducible(pf, lf, d));
    per_factor.push_back(std::move(degs));
  }
  std::vector<HomologyComponent> out;
  std::vector<int> split(nf, 0);
  // enumerate degree splits d_1 + ... + d_nf = k in lexicographic order
  std::function<void(std::size_t, int)> rec = [&](std::size_t fi, int rem) {
    if (fi + 1 == nf) {
      split[fi] = rem;
      std::vector<std::size_t> pick(nf, 0);
      std::function<void(std::size_t)> emit = [&](std::size_t g) {
        if (g == nf) {
          HomologyComponent c;
          c.degree = k;
          for (std::size_t x = 0; x < nf; ++x) {
            const auto& cx = per_factor[x][split[x]][pick[x]];
            int off = rs.factor_offset(static_cast<int>(x));
            for (int node : cx.word) c.word.push_back(node + off);
            c.hw.insert(c.hw.end(), cx.hw.begin(), cx.hw.end());
          }
          out.push_back(std::move(c));
          return;
        }
        for (pick[g] = 0; pick[g] < per_factor[g][split[g]].size(); ++pick[g]) emit(g + 1);
      };
      emit(0);
      return;
    }
    for (int d = 0; d <= rem; ++d) {
      split[fi] = d;
      rec(fi + 1, rem - d);
    }
  };
  rec(0, k);
  return out;
}

/// Degree-2 homology of the adjoint representation; for reducible systems one
/// block of components per simple factor (adjoint = sum of factor adjoints).
inline std::vector<HomologyComponent> harmonic_curvature(const Parabolic& p) {
  const RootSystem& rs = p.rs();
  std::vector<HomologyComponent> out;
  for (std::size_t fi = 0; fi < rs.lie_type().size(); ++fi) {
    Weight lambda(rs.rank(), Rat(0));
    RootSystem sub({rs.lie_type()[fi]});
    const Root& hr = sub.highest_root();
    int off = rs.factor_offset(static_cast<int>(fi));
    for (int j = 0; j < rs.lie_type()[fi].rank; ++j) lambda[off + j] = hr.fw[j];
    auto cs = homology(p, lambda, 2);
    out.insert(out.end(), cs.begin(), cs.end());
  }
  return out;
}

/// Kostant spectral value -((|lambda+rho|^2 - |mu+rho|^2))/2 under the
/// normalized pairing.  The geometric quabla scalar of a subsystem inside a
/// bigger algebra is -s times this value, s the inherited Killing scale.
inline Rat laplacian_eigenvalue(const RootSystem& rs, const Weight& lambda,
                                const Weight& mu) {
  Weight lr = lambda + rs.rho();
  Weight mr = mu + rs.rho();
  return -(rs.pairing(lr, lr) - rs.pairing(mr, mr)) / 2;
}

/// Orders of the first BGG operator of the representation with highest
/// weight lambda: geometric-weight gap between H_0 and each H_1 component.
inline std::vector<Rat> bgg_first_orders(const Parabolic& p, const Weight& lambda) {
  Rat gw0 = p.geometric_weight(lambda);
  std::vector<Rat> orders;
  for (const auto& c : homology(p, lambda, 1))
    orders.push_back(gw0 - p.geometric_weight(c.hw));
  return orders;
}

/// Single order when all H_1 components agree; throws otherwise.
inline Rat bgg_first_order(const Parabolic& p, const Weight& lambda) {
  auto orders = bgg_first_orders(p, lambda);
  if (orders.empty()) throw std::domain_error("no degree-1 homology");
  for (const auto& o : orders)
    if (o != orders.front())
      throw std::domain_error("BGG order differs between H_1 components");
  return orders.front();
}

} // namespace paralie

#endif
