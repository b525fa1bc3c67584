#ifndef PARALIE_DYNKIN_HPP
#define PARALIE_DYNKIN_HPP

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "paralie/rational.hpp"

namespace paralie {

// Node conventions, 1-based in all I/O:
//   A_n, B_n, C_n: chain 1..n (B: node n short; C: node n long).
//   D_n: chain 1..n-2 with fork nodes n-1, n attached to n-2.
//   E6: chain 1..5, node 6 attached to node 3.
//   E7: chain 1..6, node 7 attached to node 4.
//   E8: chain 1..7, node 8 attached to node 5.
//   F4: chain, nodes 1,2 long and 3,4 short.  G2: node 1 short, node 2 long.
struct SimpleFactor {
  char family = 'A';
  int rank = 1;

  bool operator==(const SimpleFactor&) const = default;
};

using LieType = std::vector<SimpleFactor>;

inline void validate(const SimpleFactor& f) {
  switch (f.family) {
    case 'A':
      if (f.rank < 1) throw std::invalid_argument("A requires rank >= 1");
      return;
    case 'B':
    case 'C':
      if (f.rank < 2) throw std::invalid_argument("B,C require rank >= 2");
      return;
    case 'D':
      if (f.rank < 3) throw std::invalid_argument("D requires rank >= 3");
      return;
    case 'E':
      if (f.rank < 6 || f.rank > 8) throw std::invalid_argument("E requires rank in {6,7,8}");
      return;
    case 'F':
      if (f.rank != 4) throw std::invalid_argument("F requires rank 4");
      return;
    case 'G':
      if (f.rank != 2) throw std::invalid_argument("G requires rank 2");
      return;
    default:
      throw std::invalid_argument(std::string("unknown family '") + f.family + "'");
  }
}

inline void validate(const LieType& lt) {
  if (lt.empty()) throw std::invalid_argument("empty Lie type");
  for (const auto& f : lt) validate(f);
}

inline std::string to_string(const LieType& lt) {
  std::string s;
  for (std::size_t i = 0; i < lt.size(); ++i) {
    if (i) s += "+";
    s += lt[i].family;
    s += std::to_string(lt[i].rank);
  }
  return s;
}

/// Parses "E6", "A3+A3", "D5" etc.
inline LieType parse_lie_type(const std::string& s) {
  LieType lt;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t plus = s.find_first_of("+x", pos);
    if (plus == std::string::npos) plus = s.size();
    std::string tok = s.substr(pos, plus - pos);
    if (tok.size() < 2) throw std::invalid_argument("bad Lie type token: " + tok);
    SimpleFactor f;
    f.family = static_cast<char>(std::toupper(tok[0]));
    f.rank = std::atoi(tok.c_str() + 1);
    lt.push_back(f);
    pos = plus + 1;
  }
  validate(lt);
  return lt;
}

/// Undirected diagram edges of one simple factor, 0-based local indices.
inline std::vector<std::pair<int, int>> factor_edges(const SimpleFactor& f) {
  std::vector<std::pair<int, int>> e;
  int n = f.rank;
  switch (f.family) {
    case 'A':
    case 'B':
    case 'C':
    case 'F':
    case 'G':
      for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      return e;
    case 'D':
      for (int i = 0; i + 1 < n - 1; ++i) e.emplace_back(i, i + 1);
      if (n >= 3) e.emplace_back(n - 3, n - 1);
      return e;
    case 'E': {
      int chain = n - 1;
      for (int i = 0; i + 1 < chain; ++i) e.emplace_back(i, i + 1);
      int attach = (n == 6) ? 2 : (n == 7 ? 3 : 4);
      e.emplace_back(attach, n - 1);
      return e;
    }
  }
  throw std::invalid_argument("unknown family");
}

/// Half squared lengths (alpha_i,alpha_i)/2 with long roots of norm 2.
inline std::vector<Rat> factor_root_halfnorms(const SimpleFactor& f) {
  int n = f.rank;
  std::vector<Rat> d(n, Rat(1));
  switch (f.family) {
    case 'B': d[n - 1] = rat(1, 2); break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) d[i] = rat(1, 2);
      break;
    case 'F': d[2] = d[3] = rat(1, 2); break;
    case 'G': d[0] = rat(1, 3); break;
    default: break;
  }
  return d;
}

/// Cartan matrix with entry (i,j) = <alpha_j, alpha_i^vee>, so that the
/// fundamental-weight coordinates of a root are C * (simple coordinates).
inline std::vector<std::vector<long>> cartan_matrix(const LieType& lt) {
  validate(lt);
  int total = 0;
  for (const auto& f : lt) total += f.rank;
  std::vector<std::vector<long>> c(total, std::vector<long>(total, 0));
  int off = 0;
  for (const auto& f : lt) {
    auto d = factor_root_halfnorms(f);
    for (int i = 0; i < f.rank; ++i) c[off + i][off + i] = 2;
    for (auto [a, b] : factor_edges(f)) {
      // (alpha_a, alpha_b) = -max(d_a, d_b) for adjacent simple roots
      Rat ab = -std::max(d[a], d[b]);
      Rat cab = ab / d[a]; // <alpha_b, alpha_a^vee>
      Rat cba = ab / d[b];
      c[off + a][off + b] = static_cast<long>(cab.get_num().get_si());
      c[off + b][off + a] = static_cast<long>(cba.get_num().get_si());
      if (cab.get_den() != 1 || cba.get_den() != 1)
        throw std::logic_error("non-integral Cartan entry");
    }
    off += f.rank;
  }
  return c;
}

struct DynkinEdge {
  int a = 0, b = 0;  // 0-based node indices, a < b
  int mult = 1;      // 1, 2 or 3
  int arrow_to = -1; // short-root end for mult > 1, else -1
};

inline std::vector<DynkinEdge> diagram_edges(const LieType& lt) {
  auto c = cartan_matrix(lt);
  std::vector<DynkinEdge> edges;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (c[i][j] == 0) continue;
      DynkinEdge e;
      e.a = static_cast<int>(i);
      e.b = static_cast<int>(j);
      e.mult = static_cast<int>(c[i][j] * c[j][i]);
      if (e.mult > 1) e.arrow_to = (c[j][i] <= -2) ? e.b : e.a;
      edges.push_back(e);
    }
  return edges;
}

namespace detail {
inline bool ascii_only() { return std::getenv("PARALIE_ASCII") != nullptr; }
}

/// ASCII diagram: plain nodes `o`, crossed nodes `x`, edges --, =>, triple;
/// labels (if given) printed above the chain nodes.  Branch nodes (D, E types)
/// are drawn on a line below their attachment point.
inline std::string render_dynkin(const LieType& lt,
                                 const std::set<int>& crossed_1based = {},
                                 const std::vector<std::string>& labels = {}) {
  validate(lt);
  auto edges = diagram_edges(lt);
  int total = 0;
  for (const auto& f : lt) total += f.rank;

  // Chain nodes in index order; branch nodes of D/E factors drop below.
  std::vector<bool> is_branch(total, false);
  std::vector<int> attach(total, -1);
  int off = 0;
  for (const auto& f : lt) {
    if (f.family == 'D') {
      is_branch[off + f.rank - 1] = true;
      attach[off + f.rank - 1] = off + f.rank - 3;
    } else if (f.family == 'E') {
      is_branch[off + f.rank - 1] = true;
      attach[off + f.rank - 1] = off + (f.rank == 6 ? 2 : f.rank == 7 ? 3 : 4);
    }
    off += f.rank;
  }

  auto edge_between = [&](int a, int b) -> const DynkinEdge* {
    for (const auto& e : edges)
      if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return &e;
    return nullptr;
  };
  auto edge_str = [&](const DynkinEdge& e, int left, int right) -> std::string {
    if (e.mult == 1) return "--";
    if (e.mult == 2) return (e.arrow_to == right) ? "=>" : "<=";
    if (detail::ascii_only()) return (e.arrow_to == right) ? "3>" : "<3";
    return (e.arrow_to == right) ? "≡>" : "<≡";
  };
  auto node_char = [&](int i) {
    return crossed_1based.count(i + 1) ? std::string("x") : std::string("o");
  };

  std::string label_row, node_row, stem_row, branch_row;
  bool have_labels = !labels.empty(), have_branch = false;
  std::size_t col = 0;
  off = 0;
  for (std::size_t fi = 0; fi < lt.size(); ++fi) {
    const auto& f = lt[fi];
    if (fi) {
      label_row += "   ";
      node_row += "   ";
      stem_row += "   ";
      branch_row += "   ";
      col += 3;
    }
    int chain = f.rank - (is_branch[off + f.rank - 1] ? 1 : 0);
    for (int i = 0; i < chain; ++i) {
      int node = off + i;
      std::string lab = (have_labels && node < static_cast<int>(labels.size()))
                            ? labels[node]
                            : "";
      std::string cell = node_char(node);
      std::string joint;
      if (i + 1 < chain) {
        const DynkinEdge* e = edge_between(node, node + 1);
        joint = e ? edge_str(*e, node, node + 1) : "  ";
      }
      // pad so that labels stay above their nodes
      std::size_t width = std::max(lab.size(), cell.size() + joint.size());
      label_row += lab + std::string(width - lab.size(), ' ');
      bool branch_here = false;
      int bnode = -1;
      if (is_branch[off + f.rank - 1] && attach[off + f.rank - 1] == node) {
        branch_here = true;
        bnode = off + f.rank - 1;
        have_branch = true;
      }
      node_row += cell + joint;
      node_row += std::string(width - cell.size() - joint.size(), ' ');
      if (branch_here) {
        stem_row += "|" + std::string(width - 1, ' ');
        std::string blab;
        if (have_labels && bnode < static_cast<int>(labels.size()))
          blab = " " + labels[bnode];
        branch_row += node_char(bnode) + blab +
                      std::string(width > 1 + blab.size() ? width - 1 - blab.size() : 0, ' ');
      } else {
        stem_row += std::string(width, ' ');
        branch_row += std::string(width, ' ');
      }
      col += width;
    }
    off += f.rank;
  }

  auto rtrim = [](std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
  };
  std::string out;
  if (have_labels) out += rtrim(label_row) + "\n";
  out += rtrim(node_row) + "\n";
  if (have_branch) {
    out += rtrim(stem_row) + "\n";
    out += rtrim(branch_row) + "\n";
  }
  return out;
}

} // namespace paralie

#endif
