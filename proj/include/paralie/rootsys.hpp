#ifndef PARALIE_ROOTSYS_HPP
#define PARALIE_ROOTSYS_HPP

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "paralie/dynkin.hpp"
#include "paralie/matrix.hpp"
#include "paralie/rational.hpp"

namespace paralie {

struct Root {
  IntVec simple; // coefficients over simple roots, one sign
  IntVec fw;     // Cartan matrix applied to simple coordinates

  bool operator==(const Root&) const = default;
  bool operator<(const Root& o) const { return simple < o.simple; }
};

inline Weight to_weight(const IntVec& v) {
  Weight w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i];
  return w;
}

/// Exact root-system arithmetic for a (possibly reducible) Dynkin type.
/// Immutable after construction; all member functions are const.
class RootSystem {
public:
  explicit RootSystem(LieType lt) : lie_type_(std::move(lt)) {
    validate(lie_type_);
    cartan_ = cartan_matrix(lie_type_);
    n_ = static_cast<int>(cartan_.size());
    int off = 0;
    for (const auto& f : lie_type_) {
      offsets_.push_back(off);
      auto d = factor_root_halfnorms(f);
      halfnorm_.insert(halfnorm_.end(), d.begin(), d.end());
      for (int i = 0; i < f.rank; ++i) factor_of_.push_back(static_cast<int>(offsets_.size()) - 1);
      off += f.rank;
    }
    QMat c(n_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) c(i, j) = cartan_[i][j];
    inv_cartan_ = c.inverse();
    gram_ = QMat(n_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) gram_(i, j) = halfnorm_[i] * inv_cartan_(i, j);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (gram_(i, j) != gram_(j, i)) throw std::logic_error("pairing not symmetric");
    build_positive_roots();
  }

  const LieType& lie_type() const { return lie_type_; }
  int rank() const { return n_; }
  bool irreducible() const { return lie_type_.size() == 1; }
  int factor_of(int node0) const { return factor_of_[node0]; }
  int factor_offset(int fi) const { return offsets_[fi]; }

  const std::vector<std::vector<long>>& cartan() const { return cartan_; }
  const QMat& inverse_cartan() const { return inv_cartan_; }
  const std::vector<Root>& positive_roots() const { return roots_; }
  int dim() const { return 2 * static_cast<int>(roots_.size()) + n_; }

  Weight rho() const { return Weight(n_, Rat(1)); }

  Weight fw_of_simple(int i0) const {
    Weight w(n_, Rat(0));
    for (int j = 0; j < n_; ++j) w[j] = cartan_[j][i0];
    return w;
  }

  /// Invariant pairing, normalized so long roots have squared norm 2.
  Rat pairing(const Weight& mu, const Weight& nu) const {
    if (static_cast<int>(mu.size()) != n_ || static_cast<int>(nu.size()) != n_)
      throw std::invalid_argument("weight dimension mismatch");
    Rat s(0);
    for (int i = 0; i < n_; ++i) {
      if (mu[i] == 0) continue;
      for (int j = 0; j < n_; ++j)
        if (nu[j] != 0) s += mu[i] * gram_(i, j) * nu[j];
    }
    return s;
  }

  Rat pairing(const Weight& mu, const Root& alpha) const {
    return pairing(mu, to_weight(alpha.fw));
  }

  /// Simple reflection at node i (0-based): adds the coefficient at i to the
  /// neighbours, with edge multiplicity, then negates it.
  Weight reflect(int i0, const Weight& mu) const {
    check_node(i0);
    Weight r(mu);
    Rat b = mu[i0];
    if (b == 0) return r;
    for (int j = 0; j < n_; ++j) {
      if (j == i0 || cartan_[j][i0] == 0) continue;
      r[j] += b * Rat(-cartan_[j][i0]);
    }
    r[i0] = -b;
    return r;
  }

  /// Reflection in an arbitrary root (from its fundamental-weight coords).
  Weight reflect_root(const Weight& alpha_fw, const Weight& mu) const {
    Rat na = pairing(alpha_fw, alpha_fw);
    if (na == 0) throw std::invalid_argument("reflection in zero vector");
    Rat c = 2 * pairing(mu, alpha_fw) / na;
    Weight r(mu);
    for (int i = 0; i < n_; ++i) r[i] -= c * alpha_fw[i];
    return r;
  }

  /// Greedy descent to the anti-dominant chamber; reflects at the
  /// lowest-index strictly positive coefficient.  Returns the anti-dominant
  /// representative together with the reflection word (0-based nodes).
  std::pair<Weight, std::vector<int>> to_antidominant(const Weight& mu) const {
    Weight w(mu);
    std::vector<int> word;
    const std::size_t guard = 4 * roots_.size() + 16;
    while (true) {
      int pos = -1;
      for (int i = 0; i < n_; ++i)
        if (w[i] > 0) { pos = i; break; }
      if (pos < 0) break;
      w = reflect(pos, w);
      word.push_back(pos);
      if (word.size() > guard) throw std::logic_error("antidominant descent failed to terminate");
    }
    return {w, word};
  }

  /// Permutation sigma (0-based) with -w0(omega_i) = omega_{sigma(i)}.
  std::vector<int> minus_w0() const {
    if (!irreducible())
      throw std::domain_error("minus_w0 requires an irreducible system; apply per factor");
    std::vector<int> sigma(n_, -1);
    for (int i = 0; i < n_; ++i) {
      Weight omega(n_, Rat(0));
      omega[i] = 1;
      Weight anti = to_antidominant(omega).first;
      int idx = -1;
      for (int j = 0; j < n_; ++j) {
        if (anti[j] == -1) {
          if (idx >= 0) throw std::logic_error("minus_w0: not minus a fundamental weight");
          idx = j;
        } else if (anti[j] != 0) {
          throw std::logic_error("minus_w0: not minus a fundamental weight");
        }
      }
      sigma[i] = idx;
    }
    return sigma;
  }

  /// The unique maximal root; dominant of maximal height (non-simply-laced
  /// systems also have a dominant short root).
  const Root& highest_root() const {
    if (!irreducible())
      throw std::domain_error("highest_root requires an irreducible system; apply per factor");
    const Root* best = nullptr;
    long best_height = -1;
    for (const auto& r : roots_) {
      bool dom = true;
      for (int j = 0; j < n_; ++j)
        if (r.fw[j] < 0) { dom = false; break; }
      if (!dom) continue;
      long height = 0;
      for (long x : r.simple) height += x;
      if (height > best_height) {
        best_height = height;
        best = &r;
      }
    }
    if (!best) throw std::logic_error("no dominant root found");
    return *best;
  }

  /// Concatenation of the factor highest roots: the adjoint highest weight.
  Weight adjoint_weight() const {
    Weight w(n_, Rat(0));
    for (std::size_t fi = 0; fi < lie_type_.size(); ++fi) {
      RootSystem sub({lie_type_[fi]});
      const Root& hr = sub.highest_root();
      for (int j = 0; j < lie_type_[fi].rank; ++j) w[offsets_[fi] + j] = hr.fw[j];
    }
    return w;
  }

  bool is_dominant(const Weight& mu) const {
    for (const auto& c : mu)
      if (c < 0) return false;
    return true;
  }

  /// Weyl dimension formula; exact, requires a dominant integral weight.
  mpz_class weyl_dim(const Weight& lambda) const {
    if (static_cast<int>(lambda.size()) != n_)
      throw std::invalid_argument("weight dimension mismatch");
    for (const auto& c : lambda)
      if (c < 0 || c.get_den() != 1)
        throw std::invalid_argument("weyl_dim requires a dominant integral weight");
    Weight lr = lambda;
    for (auto& c : lr) c += 1;
    Weight r = rho();
    Rat prod(1);
    for (const auto& alpha : roots_) {
      Weight af = to_weight(alpha.fw);
      prod *= pairing(lr, af) / pairing(r, af);
    }
    if (prod.get_den() != 1) throw std::logic_error("weyl_dim: non-integral result");
    return prod.get_num();
  }

private:
  void check_node(int i0) const {
    if (i0 < 0 || i0 >= n_) throw std::out_of_range("node index out of range");
  }

  void build_positive_roots() {
    std::set<IntVec> seen;
    std::vector<Root> queue;
    for (int i = 0; i < n_; ++i) {
      Root r;
      r.simple.assign(n_, 0);
      r.simple[i] = 1;
      r.fw.assign(n_, 0);
      for (int j = 0; j < n_; ++j) r.fw[j] = cartan_[j][i];
      seen.insert(r.simple);
      queue.push_back(r);
    }
    // BFS by height; the alpha_i-string through alpha continues upward iff
    // p - <alpha, alpha_i^vee> > 0, where p is the depth of the string below
    // alpha (those roots have lower height, so are already known).
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Root cur = queue[head];
      for (int i = 0; i < n_; ++i) {
        long p = 0;
        IntVec down = cur.simple;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !seen.count(down)) break;
          ++p;
        }
        if (p - cur.fw[i] <= 0) continue;
        Root nxt = cur;
        nxt.simple[i] += 1;
        for (int j = 0; j < n_; ++j) nxt.fw[j] += cartan_[j][i];
        if (seen.insert(nxt.simple).second) queue.push_back(nxt);
      }
    }
    roots_ = std::move(queue);
    std::sort(roots_.begin(), roots_.end());
  }

  LieType lie_type_;
  int n_ = 0;
  std::vector<std::vector<long>> cartan_;
  QMat inv_cartan_, gram_;
  std::vector<Rat> halfnorm_;
  std::vector<Root> roots_;
  std::vector<int> offsets_, factor_of_;
};

} // namespace paralie

#endif
