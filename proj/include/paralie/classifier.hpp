#ifndef PARALIE_CLASSIFIER_HPP
#define PARALIE_CLASSIFIER_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "paralie/homology.hpp"
#include "paralie/parabolic.hpp"

namespace paralie {

/// Nodes (1-based) whose highest-root coefficient equals one; crossing
/// one of these gives the abelian parabolics, i.e. the symmetric R-spaces.
inline std::vector<int> symmetric_rspaces(const LieType& lt) {
  if (lt.size() != 1) throw std::domain_error("symmetric_rspaces requires an irreducible type");
  RootSystem rs(lt);
  const Root& theta = rs.highest_root();
  std::vector<int> nodes;
  for (int i = 0; i < rs.rank(); ++i)
    if (theta.simple[i] == 1) nodes.push_back(i + 1);
  return nodes;
}

/// Self-duality of a symmetric R-space: -w0 preserves the crossed set.
inline bool is_self_dual(const Parabolic& q) {
  if (!q.is_abelian()) throw std::domain_error("is_self_dual requires an abelian parabolic");
  auto sigma = q.rs().minus_w0();
  for (int i : q.crossed0())
    if (!q.crossed0().count(sigma[i])) return false;
  return true;
}

namespace detail {

/// All bijections onto the canonical diagram of some simple type matching the
/// induced Cartan entries exactly; tried in family order A,B,C,D,E,F,G.
struct ComponentId {
  SimpleFactor factor;
  // maps local position (index into the component's node list) -> canonical
  std::vector<std::vector<int>> isomorphisms;
};

inline ComponentId identify_component(const std::vector<std::vector<long>>& sub) {
  int m = static_cast<int>(sub.size());
  std::vector<SimpleFactor> candidates;
  candidates.push_back({'A', m});
  if (m >= 2) candidates.push_back({'B', m});
  if (m >= 2) candidates.push_back({'C', m});
  if (m >= 4) candidates.push_back({'D', m});
  if (m >= 6 && m <= 8) candidates.push_back({'E', m});
  if (m == 4) candidates.push_back({'F', 4});
  if (m == 2) candidates.push_back({'G', 2});
  for (const auto& f : candidates) {
    auto canon = cartan_matrix({f});
    std::vector<std::vector<int>> isos;
    std::vector<int> perm(m, -1);
    std::vector<bool> used(m, false);
    std::function<void(int)> rec = [&](int i) {
      if (i == m) {
        isos.push_back(perm);
        return;
      }
      for (int c = 0; c < m; ++c) {
        if (used[c]) continue;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) {
          if (sub[i][j] != canon[c][perm[j]]) ok = false;
          if (sub[j][i] != canon[perm[j]][c]) ok = false;
        }
        if (!ok) continue;
        used[c] = true;
        perm[i] = c;
        rec(i + 1);
        used[c] = false;
      }
    };
    rec(0);
    if (!isos.empty()) return {f, std::move(isos)};
  }
  throw std::logic_error("component is not a simple Dynkin diagram");
}

} // namespace detail

/// The isotropy R-space data: the Dynkin diagram of g is the diagram of h
/// with the crossed node deleted; p crosses the former neighbours, and W has
/// the restricted highest root of h as highest weight.
struct Isotropy {
  RootSystem rs;               // canonical renumbering of the kept nodes
  std::set<int> p_crossed;     // 1-based iso nodes
  Weight W_hw;                 // over iso nodes
  std::vector<int> iso_to_orig; // 0-based: iso node -> node of h
  Rat killing_scale;           // (h-norm^2 of the iso long roots)/2
};

inline Isotropy isotropy(const Parabolic& q) {
  const RootSystem& h = q.rs();
  if (!q.is_abelian()) throw std::domain_error("isotropy requires a symmetric R-space");
  std::vector<int> kept;
  for (int i = 0; i < h.rank(); ++i)
    if (!q.is_crossed0(i)) kept.push_back(i);
  if (kept.empty()) throw std::domain_error("isotropy of the Borel is trivial");

  // connected components of the kept sub-diagram
  std::vector<int> comp(kept.size(), -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < kept.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < kept.size(); ++v)
        if (comp[v] < 0 && h.cartan()[kept[u]][kept[v]] != 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }

  const Root& theta_h = h.highest_root();
  std::vector<int> crossed_orig(q.crossed0().begin(), q.crossed0().end());

  LieType iso_type;
  std::vector<int> iso_to_orig;
  std::set<int> p_crossed;
  Weight w_hw;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> nodes; // original h indices of this component
    for (std::size_t s = 0; s < kept.size(); ++s)
      if (comp[s] == c) nodes.push_back(kept[s]);
    std::vector<std::vector<long>> sub(nodes.size(), std::vector<long>(nodes.size()));
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = 0; j < nodes.size(); ++j)
        sub[i][j] = h.cartan()[nodes[i]][nodes[j]];
    auto id = detail::identify_component(sub);

    // choose the isomorphism whose restricted W weight is lexicographically
    // largest; break ties toward smaller crossed indices, then smaller maps
    const std::vector<int>* best = nullptr;
    Weight best_w;
    std::vector<int> best_cross;
    for (const auto& iso : id.isomorphisms) {
      Weight w(nodes.size(), Rat(0));
      std::vector<int> cross;
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        w[iso[i]] = theta_h.fw[nodes[i]];
        bool adj = false;
        for (int x : crossed_orig)
          if (h.cartan()[nodes[i]][x] != 0) adj = true;
        if (adj) cross.push_back(iso[i] + 1);
      }
      std::sort(cross.begin(), cross.end());
      auto better = [&]() {
        if (!best) return true;
        if (w != best_w) return w > best_w;
        if (cross != best_cross) return cross < best_cross;
        return iso < *best;
      };
      if (better()) {
        best = &iso;
        best_w = w;
        best_cross = cross;
      }
    }
    int offset = 0;
    for (const auto& f : iso_type) offset += f.rank;
    iso_type.push_back(id.factor);
    iso_to_orig.resize(offset + nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
      iso_to_orig[offset + (*best)[i]] = nodes[i];
    for (int x : best_cross) p_crossed.insert(offset + x);
    w_hw.insert(w_hw.end(), best_w.begin(), best_w.end());
  }

  Isotropy out{RootSystem(iso_type), std::move(p_crossed), std::move(w_hw),
               std::move(iso_to_orig), Rat(1)};

  // inherited Killing normalization: squared length in h of the iso roots
  // that are long in the standalone iso system
  Rat max_norm(0);
  for (const auto& alpha : h.positive_roots()) {
    bool in_iso = true;
    for (int x : crossed_orig)
      if (alpha.simple[x] != 0) in_iso = false;
    if (!in_iso) continue;
    Rat nn = h.pairing(to_weight(alpha.fw), to_weight(alpha.fw));
    if (nn > max_norm) max_norm = nn;
  }
  out.killing_scale = max_norm / 2;
  return out;
}

struct OrthSequence {
  std::vector<Root> betas; // beta_n first, ..., beta_0 last
};

/// Harish-Chandra style sequence: beta_n is the highest root; each next beta
/// is the highest root of the irreducible orthogonal-complement component
/// containing the crossed simple root.  Self-duality forces beta_0 = alpha_r.
inline OrthSequence strongly_orthogonal_seq(const Parabolic& q) {
  const RootSystem& h = q.rs();
  if (!h.irreducible()) throw std::domain_error("strongly_orthogonal_seq: irreducible h only");
  if (q.crossed0().size() != 1)
    throw std::domain_error("strongly_orthogonal_seq: a single crossed node is required");
  int r_node = *q.crossed0().begin();
  Root alpha_r;
  alpha_r.simple.assign(h.rank(), 0);
  alpha_r.simple[r_node] = 1;
  alpha_r.fw.assign(h.rank(), 0);
  for (int j = 0; j < h.rank(); ++j) alpha_r.fw[j] = h.cartan()[j][r_node];

  auto pair_roots = [&](const Root& a, const Root& b) {
    return h.pairing(to_weight(a.fw), to_weight(b.fw));
  };

  OrthSequence seq;
  seq.betas.push_back(h.highest_root());
  while (true) {
    // positive roots orthogonal to every chosen beta
    std::vector<Root> sub;
    bool height_one_left = false;
    for (const auto& alpha : h.positive_roots()) {
      bool orth = true;
      for (const auto& b : seq.betas)
        if (pair_roots(alpha, b) != 0) { orth = false; break; }
      if (!orth) continue;
      sub.push_back(alpha);
      if (q.sigma_height(alpha) == 1) height_one_left = true;
    }
    if (!height_one_left) break;

    std::set<IntVec> in_sub;
    for (const auto& a : sub) in_sub.insert(a.simple);
    // indecomposable positive roots of the subsystem
    std::vector<Root> simples;
    for (const auto& a : sub) {
      bool decomposable = false;
      for (const auto& b : sub) {
        IntVec diff(a.simple.size());
        bool nonneg = false, valid = true;
        for (std::size_t i = 0; i < diff.size(); ++i) {
          diff[i] = a.simple[i] - b.simple[i];
          if (diff[i] < 0) valid = false;
          if (diff[i] > 0) nonneg = true;
        }
        if (valid && nonneg && in_sub.count(diff)) { decomposable = true; break; }
      }
      if (!decomposable) simples.push_back(a);
    }
    // graph components of the indecomposables under non-orthogonality
    std::vector<int> comp(simples.size(), -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < simples.size(); ++s) {
      if (comp[s] >= 0) continue;
      std::vector<std::size_t> stack{s};
      comp[s] = ncomp;
      while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < simples.size(); ++v)
          if (comp[v] < 0 && pair_roots(simples[u], simples[v]) != 0) {
            comp[v] = ncomp;
            stack.push_back(v);
          }
      }
      ++ncomp;
    }
    // the component containing alpha_r
    int target = -1;
    for (std::size_t s = 0; s < simples.size(); ++s)
      if (simples[s].simple == alpha_r.simple) target = comp[s];
    if (target < 0) throw std::logic_error("orthogonal sequence: alpha_r left the subsystem");

    std::vector<Root> comp_simples;
    for (std::size_t s = 0; s < simples.size(); ++s)
      if (comp[s] == target) comp_simples.push_back(simples[s]);
    auto in_component = [&](const Root& d) {
      for (const auto& s : comp_simples)
        if (pair_roots(d, s) != 0) return true;
      return false;
    };
    // unique maximal element of the component in the root partial order
    std::optional<Root> highest;
    for (const auto& d : sub) {
      if (!in_component(d)) continue;
      bool maximal = true;
      for (const auto& s : comp_simples) {
        IntVec up(d.simple.size());
        for (std::size_t i = 0; i < up.size(); ++i) up[i] = d.simple[i] + s.simple[i];
        if (in_sub.count(up)) { maximal = false; break; }
      }
      if (!maximal) continue;
      if (highest) throw std::logic_error("orthogonal sequence: non-unique maximal root");
      highest = d;
    }
    if (!highest) throw std::logic_error("orthogonal sequence: no maximal root");
    seq.betas.push_back(*highest);
  }

  for (const auto& b : seq.betas) {
    if (q.sigma_height(b) != 1) throw std::logic_error("orthogonal sequence: height not one");
    for (const auto& b2 : seq.betas) {
      Rat p = pair_roots(b, b2);
      if (&b == &b2 ? p != 2 : p != 0)
        throw std::logic_error("orthogonal sequence: pairing not 2*delta");
    }
  }
  if (seq.betas.back().simple != alpha_r.simple)
    throw std::domain_error("beta_0 != alpha_r: the R-space is not self-dual");
  return seq;
}

/// The scalar parameter r and projective dimension n.
inline std::pair<long, long> parameters(const Parabolic& q) {
  const RootSystem& h = q.rs();
  OrthSequence seq = strongly_orthogonal_seq(q);
  long n = static_cast<long>(seq.betas.size()) - 1;
  if (n < 1) throw std::domain_error("parameters: projective dimension must be positive");

  std::vector<Root> height_one;
  for (const auto& alpha : h.positive_roots())
    if (q.sigma_height(alpha) == 1) height_one.push_back(alpha);

  auto pair_count = [&](std::size_t i, std::size_t j) {
    long count = 0;
    for (const auto& alpha : height_one) {
      bool match = true;
      for (std::size_t k = 0; k < seq.betas.size() && match; ++k) {
        Rat p = h.pairing(to_weight(alpha.fw), to_weight(seq.betas[k].fw));
        Rat want = (k == i || k == j) ? 1 : 0;
        if (p != want) match = false;
      }
      if (match) ++count;
    }
    return count;
  };

  long r = -1;
  for (std::size_t i = 0; i < seq.betas.size(); ++i)
    for (std::size_t j = i + 1; j < seq.betas.size(); ++j) {
      long c = pair_count(i, j);
      if (r < 0)
        r = c;
      else if (c != r)
        throw std::logic_error("parameters: Peirce block size depends on the pair");
    }
  // dim g_(1) = (n+1)(rn+2)/2
  if (2 * static_cast<long>(height_one.size()) != (n + 1) * (r * n + 2))
    throw std::logic_error("parameters: dimension consistency check failed");
  return {r, n};
}

/// Highest weights, over the isotropy system, of the graded components of W
/// (top = L*B, mid = L*(g/p), bot = L*) or of W* (top = L, mid = L p-perp,
/// bot = L B*).  mid has two components exactly when the isotropy algebra is
/// reducible (type A family).
struct GradedComponents {
  Weight top;
  std::vector<Weight> mid;
  Weight bot;
};

namespace detail {

inline GradedComponents graded_components(const Parabolic& q, const Isotropy& iso,
                                          bool dual) {
  const RootSystem& h = q.rs();
  OrthSequence seq = strongly_orthogonal_seq(q);
  const Root& beta0 = seq.betas.back();

  std::vector<int> orig_to_iso(h.rank(), -1);
  for (std::size_t i = 0; i < iso.iso_to_orig.size(); ++i)
    orig_to_iso[iso.iso_to_orig[i]] = static_cast<int>(i);

  std::array<std::set<Weight>, 3> slots; // index by <alpha, beta_0> in {0,1,2}
  for (const auto& alpha : h.positive_roots()) {
    if (q.sigma_height(alpha) != 1) continue;
    Rat c = h.pairing(to_weight(alpha.fw), to_weight(beta0.fw));
    if (c != 0 && c != 1 && c != 2)
      throw std::logic_error("graded components: unexpected beta_0 pairing");
    Weight w(iso.rs.rank(), Rat(0));
    for (int j = 0; j < h.rank(); ++j)
      if (orig_to_iso[j] >= 0) w[orig_to_iso[j]] = dual ? -alpha.fw[j] : alpha.fw[j];
    slots[static_cast<int>(c.get_num().get_si())].insert(w);
  }

  // p^0-maximal weights of one slot: mu with mu + (Levi simple root) never
  // again in the slot
  auto maximals = [&](const std::set<Weight>& s) {
    std::vector<Weight> out;
    for (const auto& mu : s) {
      bool maximal = true;
      for (int j = 0; j < iso.rs.rank() && maximal; ++j) {
        if (iso.p_crossed.count(j + 1)) continue;
        if (s.count(mu + iso.rs.fw_of_simple(j))) maximal = false;
      }
      if (maximal) out.push_back(mu);
    }
    return out;
  };

  GradedComponents g;
  auto expect_one = [&](const std::set<Weight>& s, const char* name) {
    auto m = maximals(s);
    if (m.size() != 1)
      throw std::logic_error(std::string("graded components: ") + name + " not irreducible");
    return m[0];
  };
  if (dual) {
    g.top = expect_one(slots[2], "L");
    g.mid = maximals(slots[1]);
    g.bot = expect_one(slots[0], "L B*");
  } else {
    g.top = expect_one(slots[0], "L* B");
    g.mid = maximals(slots[1]);
    g.bot = expect_one(slots[2], "L*");
  }
  std::size_t expected_mid = iso.rs.lie_type().size() == 1 ? 1 : iso.rs.lie_type().size();
  if (g.mid.size() != expected_mid)
    throw std::logic_error("graded components: unexpected middle component count");
  std::sort(g.mid.begin(), g.mid.end(), [](const Weight& a, const Weight& b) { return a > b; });
  return g;
}

} // namespace detail

inline GradedComponents w_components(const Parabolic& q, const Isotropy& iso) {
  return detail::graded_components(q, iso, false);
}
inline GradedComponents wdual_components(const Parabolic& q, const Isotropy& iso) {
  return detail::graded_components(q, iso, true);
}

/// Quabla scalars computed through Kostant's spectral value with the
/// inherited Killing normalization: quabla = -s * laplacian_eigenvalue.
struct SpectralData {
  std::array<Rat, 3> on_W;  // expected (0, (rn-r+2)/2, rn)
  std::array<Rat, 3> on_Wd; // expected (0, 1, r)
  Rat on_Bstar;             // expected (rn+3r-4)/2
};

inline SpectralData spectral_data(const Parabolic& q, const Isotropy& iso) {
  auto w = w_components(q, iso);
  auto wd = wdual_components(q, iso);
  auto quabla = [&](const Weight& lambda, const Weight& mu) -> Rat {
    return Rat(-iso.killing_scale * laplacian_eigenvalue(iso.rs, lambda, mu));
  };
  auto mid_value = [&](const Weight& lambda, const std::vector<Weight>& mids) -> Rat {
    Rat v = quabla(lambda, mids.front());
    for (const auto& m : mids)
      if (quabla(lambda, m) != v)
        throw std::logic_error("spectral_data: middle components disagree");
    return v;
  };
  SpectralData s;
  s.on_W = {quabla(w.top, w.top), mid_value(w.top, w.mid), quabla(w.top, w.bot)};
  s.on_Wd = {quabla(wd.top, wd.top), mid_value(wd.top, wd.mid), quabla(wd.top, wd.bot)};
  // B*-isotypical component of p-perp tensor g; the adjoint of a reducible
  // isotropy algebra is the sum of the factor adjoints, one chain per factor
  Weight bstar = wd.bot - wd.top;
  std::optional<Rat> value;
  for (std::size_t fi = 0; fi < iso.rs.lie_type().size(); ++fi) {
    Weight adj(iso.rs.rank(), Rat(0));
    RootSystem sub({iso.rs.lie_type()[fi]});
    const Root& hr = sub.highest_root();
    int off = iso.rs.factor_offset(static_cast<int>(fi));
    for (int j = 0; j < iso.rs.lie_type()[fi].rank; ++j) adj[off + j] = hr.fw[j];
    Rat v = quabla(adj, bstar);
    if (value && *value != v)
      throw std::logic_error("spectral_data: B* eigenvalue differs between factors");
    value = v;
  }
  s.on_Bstar = *value;
  return s;
}

struct PPGDims {
  mpz_class dim_W;
  long dim_gp = 0, dim_B = 0;
  Rat half_r_np1;
};

struct PPGRecord {
  std::string family; // one of C, A, D, E7, BD
  LieType big_type;
  int q_crossed = 0; // 1-based
  bool self_dual = true;
  LieType iso_type;
  std::set<int> p_crossed;
  Weight W_hw;
  long r = 0, n = 0;
  PPGDims dims;
  std::array<Rat, 3> grading_eigs;
  std::vector<std::string> real_forms;
  Rat w_conjecture; // rn/2: the paper's empirical quabla-inverse eigenvalue,
                    // reported without assertion
};

namespace detail {

inline std::string family_label(const LieType& h, int node1) {
  char f = h[0].family;
  int k = h[0].rank;
  if (f == 'C' && node1 == k) return "C";
  if (f == 'A') return "A";
  if (f == 'D' && node1 >= k - 1) return "D";
  if (f == 'E' && k == 7) return "E7";
  if ((f == 'B' || f == 'D') && node1 == 1) return "BD";
  throw std::logic_error("unclassified self-dual symmetric R-space");
}

inline std::vector<std::string> real_forms_for(const std::string& family) {
  if (family == "C") return {"sp(2n+2,R) / sl(n+1,R): projective geometry"};
  if (family == "A")
    return {"sl(2n+2,R) / sl(n+1,R)+sl(n+1,R): para-c-projective geometry",
            "su(n+1,n+1) / sl(n+1,C): c-projective geometry"};
  if (family == "D")
    return {"so(4n+4,R) / sl(2n+2,R): grassmannian of real 2-planes",
            "so*(4n+4) / sl(n+1,H): almost quaternionic geometry"};
  if (family == "E7") return {"e7(7) / e6(6)", "e7(-25) / e6(-26): Cayley plane"};
  return {"so(p+2,q+2) / so(p+1,q+1), p+q=n: conformal geometry of signature (p,q)"};
}

} // namespace detail

inline PPGRecord ppg_record(const Parabolic& q) {
  const RootSystem& h = q.rs();
  if (!h.irreducible() || q.crossed0().size() != 1)
    throw std::domain_error("ppg_record: a single crossed node of a simple algebra is required");
  if (!is_self_dual(q)) throw std::domain_error("ppg_record: not self-dual");
  auto [r, n] = parameters(q);
  Isotropy iso = isotropy(q);

  PPGRecord rec;
  rec.big_type = h.lie_type();
  rec.q_crossed = *q.crossed0().begin() + 1;
  rec.family = detail::family_label(rec.big_type, rec.q_crossed);
  rec.iso_type = iso.rs.lie_type();
  rec.p_crossed = iso.p_crossed;
  rec.W_hw = iso.W_hw;
  rec.r = r;
  rec.n = n;

  // dimension table, from the (r,n) formulas and independently
  rec.dims.dim_W = mpz_class((n + 1) * (r * n + 2) / 2);
  if ((n + 1) * (r * n + 2) % 2 != 0) throw std::logic_error("dim W not integral");
  rec.dims.dim_gp = r * n;
  rec.dims.dim_B = n * (r * n - r + 2) / 2;
  rec.dims.half_r_np1 = rat(r * (n + 1), 2);
  if (iso.rs.weyl_dim(rec.W_hw) != rec.dims.dim_W)
    throw std::logic_error("dim W mismatch against the Weyl dimension formula");
  Parabolic p_iso(iso.rs, rec.p_crossed);
  auto gd = p_iso.graded_dims();
  if (gd.height != 1 || gd.dim.at(1) != rec.dims.dim_gp)
    throw std::logic_error("dim g/p mismatch against the graded dimensions");

  // grading eigenvalues with the root-by-root multiplicity audit
  rec.grading_eigs = {rat(2, n + 1), rat(-(n - 1), n + 1), rat(-2 * n, n + 1)};
  OrthSequence seq = strongly_orthogonal_seq(q);
  const Root& beta0 = seq.betas.back();
  std::map<Rat, long> mult;
  long lines = 0;
  for (const auto& alpha : h.positive_roots()) {
    if (q.sigma_height(alpha) != 1) continue;
    Rat c = h.pairing(to_weight(alpha.fw), to_weight(beta0.fw));
    mult[rat(2, n + 1) - c] += 1;
    if (h.pairing(to_weight(alpha.fw), to_weight(alpha.fw)) == 2) {
      bool is_line = false;
      for (const auto& b : seq.betas)
        if (b.simple == alpha.simple) is_line = true;
      if (is_line) ++lines;
    }
  }
  if (mult[rec.grading_eigs[0]] != rec.dims.dim_B || mult[rec.grading_eigs[1]] != r * n ||
      mult[rec.grading_eigs[2]] != 1 || lines != n + 1)
    throw std::logic_error("grading eigenvalue multiplicities disagree with the Peirce data");

  rec.real_forms = detail::real_forms_for(rec.family);
  rec.w_conjecture = rat(r * n, 2);
  return rec;
}

/// All self-dual symmetric R-spaces up to the given rank; exactly the five
/// families.  The two spin crossings of D_{2m} are diagram-equivalent, so
/// only the higher node is kept.
inline std::vector<PPGRecord> classify_all(int max_rank) {
  if (max_rank < 2) throw std::invalid_argument("classify_all requires max_rank >= 2");
  std::vector<PPGRecord> out;
  auto consider = [&](const LieType& lt) {
    RootSystem rs(lt);
    for (int node : symmetric_rspaces(lt)) {
      if (lt[0].family == 'D' && node == lt[0].rank - 1) continue; // spin pair
      Parabolic q(rs, {node});
      if (!is_self_dual(q)) continue;
      OrthSequence seq = strongly_orthogonal_seq(q);
      if (seq.betas.size() < 2) continue; // n = 0: zero-dimensional geometry
      out.push_back(ppg_record(q));
    }
  };
  std::vector<LieType> types;
  for (int k = 2; k <= max_rank; ++k) types.push_back({{'A', k}});
  for (int k = 2; k <= max_rank; ++k) types.push_back({{'B', k}});
  for (int k = 2; k <= max_rank; ++k) types.push_back({{'C', k}});
  for (int k = 3; k <= max_rank; ++k) types.push_back({{'D', k}});
  for (int k = 6; k <= std::min(8, max_rank); ++k) types.push_back({{'E', k}});
  if (max_rank >= 4) types.push_back({{'F', 4}});
  types.push_back({{'G', 2}});
  for (const auto& lt : types) consider(lt);
  // table order: C, A, D, E7, BD; then by rank
  auto family_key = [](const std::string& f) {
    if (f == "C") return 0;
    if (f == "A") return 1;
    if (f == "D") return 2;
    if (f == "E7") return 3;
    return 4;
  };
  std::stable_sort(out.begin(), out.end(), [&](const PPGRecord& a, const PPGRecord& b) {
    if (family_key(a.family) != family_key(b.family))
      return family_key(a.family) < family_key(b.family);
    return a.big_type[0].rank < b.big_type[0].rank;
  });
  return out;
}

struct UDualData {
  Weight U_hw; // over the isotropy nodes
  mpz_class dim_U;
  bool dim_check = false;
};

/// The quadric representation U* = S^2 W* / Cartan^2 W*, from the curated
/// per-family highest weights, with the dimension identity
/// dim S^2 W = dim Cartan^2 W + dim U* checked by the Weyl formula.
inline UDualData udual_data(const Parabolic& q) {
  PPGRecord rec = ppg_record(q);
  Isotropy iso = isotropy(q);
  long n = rec.n;
  Weight u(iso.rs.rank(), Rat(0));
  if (rec.family == "C") {
    if (n >= 2) u[n - 2] = 2;
  } else if (rec.family == "A") {
    if (n >= 2) {
      u[n - 2] = 1;
      u[n + n - 2] = 1; // node n-1 of the second factor
    }
  } else if (rec.family == "D") {
    if (n >= 2) u[2 * n - 3] = 1; // omega_{2n-2} of A_{2n+1}
  } else if (rec.family == "E7") {
    u[0] = 1;
  } // BD: trivial
  UDualData data;
  data.U_hw = u;
  data.dim_U = iso.rs.weyl_dim(u);
  mpz_class dim_w = iso.rs.weyl_dim(rec.W_hw);
  mpz_class sym2 = dim_w * (dim_w + 1) / 2;
  mpz_class cartan2 = iso.rs.weyl_dim(Rat(2) * rec.W_hw);
  data.dim_check = (sym2 == cartan2 + data.dim_U);
  if (!data.dim_check)
    throw std::logic_error("udual_data: dim S^2 W != dim Cartan^2 W + dim U*");
  return data;
}

} // namespace paralie

#endif
