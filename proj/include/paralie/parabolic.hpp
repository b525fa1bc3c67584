#ifndef PARALIE_PARABOLIC_HPP
#define PARALIE_PARABOLIC_HPP

#include <map>
#include <set>
#include <stdexcept>

#include "paralie/rootsys.hpp"

namespace paralie {

struct GradedDims {
  std::map<int, long> dim; // height k -> dim g_(k)
  int height = 0;          // maximal |k| with nonzero dim
};

/// A standard parabolic: a root system together with a crossed-node subset.
/// Node indices are 1-based at the interface, matching the diagrams.
class Parabolic {
public:
  Parabolic(RootSystem rs, const std::set<int>& crossed_1based)
      : rs_(std::move(rs)) {
    for (int i : crossed_1based) {
      if (i < 1 || i > rs_.rank())
        throw std::out_of_range("crossed node out of range");
      crossed0_.insert(i - 1);
    }
  }

  const RootSystem& rs() const { return rs_; }
  const std::set<int>& crossed0() const { return crossed0_; }
  std::set<int> crossed() const {
    std::set<int> s;
    for (int i : crossed0_) s.insert(i + 1);
    return s;
  }
  bool is_crossed0(int i0) const { return crossed0_.count(i0) > 0; }

  /// Sigma-height: sum of the simple-root coefficients over crossed nodes.
  long sigma_height(const Root& alpha) const {
    long h = 0;
    for (int i : crossed0_) h += alpha.simple[i];
    return h;
  }

  bool is_abelian() const {
    for (std::size_t fi = 0; fi < rs_.lie_type().size(); ++fi) {
      RootSystem sub({rs_.lie_type()[fi]});
      Root hr = sub.highest_root();
      long h = 0;
      int off = rs_.factor_offset(static_cast<int>(fi));
      for (int i : crossed0_)
        if (i >= off && i < off + rs_.lie_type()[fi].rank) h += hr.simple[i - off];
      if (h > 1) return false;
    }
    return true;
  }

  GradedDims graded_dims() const {
    GradedDims g;
    g.dim[0] = rs_.rank();
    for (const auto& alpha : rs_.positive_roots()) {
      long h = sigma_height(alpha);
      g.dim[h] += 1;
      g.dim[-h] += 1;
      g.height = std::max<int>(g.height, static_cast<int>(h < 0 ? -h : h));
    }
    return g;
  }

  /// rho_Sigma^T C^{-1} lambda: the geometric weight of the irreducible
  /// p-representation with highest weight lambda.
  Rat geometric_weight(const Weight& lambda) const {
    if (static_cast<int>(lambda.size()) != rs_.rank())
      throw std::invalid_argument("weight dimension mismatch");
    const QMat& ic = rs_.inverse_cartan();
    Rat w(0);
    for (int i : crossed0_)
      for (int j = 0; j < rs_.rank(); ++j)
        if (lambda[j] != 0) w += ic(i, j) * lambda[j];
    return w;
  }

  /// p-dominance: nonnegative coefficients over all uncrossed nodes.
  bool is_p_dominant(const Weight& lambda) const {
    for (int i = 0; i < rs_.rank(); ++i)
      if (!crossed0_.count(i) && lambda[i] < 0) return false;
    return true;
  }

private:
  RootSystem rs_;
  std::set<int> crossed0_;
};

inline Parabolic make_parabolic(RootSystem rs, const std::set<int>& crossed_1based) {
  return Parabolic(std::move(rs), crossed_1based);
}

} // namespace paralie

#endif
