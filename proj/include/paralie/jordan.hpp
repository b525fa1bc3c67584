#ifndef PARALIE_JORDAN_HPP
#define PARALIE_JORDAN_HPP

#include <array>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "paralie/matrix.hpp"

namespace paralie {

/// The formally real Jordan algebras of the classification: symmetric,
/// hermitian and quaternion-hermitian matrices under the symmetrised
/// product, and the spin factors R^m + R with Clifford multiplication.
class JordanAlgebra {
public:
  enum class Kind { SymReal, HermComplex, HermQuat, Spin };

  static JordanAlgebra sym_real(int k) { return JordanAlgebra(Kind::SymReal, k); }
  static JordanAlgebra herm_complex(int k) { return JordanAlgebra(Kind::HermComplex, k); }
  static JordanAlgebra herm_quat(int k) { return JordanAlgebra(Kind::HermQuat, k); }
  static JordanAlgebra spin(int m) { return JordanAlgebra(Kind::Spin, m); }

  Kind kind() const { return kind_; }
  int size() const { return k_; }
  int dim() const { return static_cast<int>(basis_.size()); }

  Weight unit() const { return unit_; }

  /// x o y in coordinates; commutative by construction.
  Weight product(const Weight& x, const Weight& y) const {
    if (kind_ == Kind::Spin) {
      // (x,s) o (y,t) = (t x + s y, <x,y> + s t)
      int m = k_;
      Weight out(m + 1, Rat(0));
      for (int i = 0; i < m; ++i) out[i] = y[m] * x[i] + x[m] * y[i];
      for (int i = 0; i < m; ++i) out[m] += x[i] * y[i];
      out[m] += x[m] * y[m];
      return out;
    }
    QMat xm = to_matrix(x), ym = to_matrix(y);
    QMat prod = rat(1, 2) * (xm * ym + ym * xm);
    return to_coords(prod);
  }

  /// Multiplication operator L_x as a dim x dim matrix.
  QMat mult_operator(const Weight& x) const {
    QMat m(dim(), dim());
    for (int j = 0; j < dim(); ++j) {
      Weight ej(dim(), Rat(0));
      ej[j] = 1;
      Weight col = product(x, ej);
      for (int i = 0; i < dim(); ++i) m(i, j) = col[i];
    }
    return m;
  }

  /// Trace form tau(x,y) = tr L_{x o y}.
  Rat trace_form(const Weight& x, const Weight& y) const {
    return mult_operator(product(x, y)).trace();
  }

  const std::vector<QMat>& matrix_basis() const { return basis_; }

  QMat to_matrix(const Weight& coords) const {
    if (kind_ == Kind::Spin) throw std::domain_error("spin factor has no matrix model here");
    QMat m(basis_[0].rows(), basis_[0].cols());
    for (int b = 0; b < dim(); ++b)
      if (coords[b] != 0) m = m + coords[b] * basis_[b];
    return m;
  }

  Weight to_coords(const QMat& m) const {
    Weight c(dim(), Rat(0));
    for (int b = 0; b < dim(); ++b) {
      auto [i, j, scale] = anchors_[b];
      c[b] = m(i, j) * scale;
    }
    // validate the matrix lies in the algebra
    QMat back(basis_[0].rows(), basis_[0].cols());
    for (int b = 0; b < dim(); ++b)
      if (c[b] != 0) back = back + c[b] * basis_[b];
    if (!(back == m)) throw std::logic_error("product left the Jordan algebra");
    return c;
  }

private:
  JordanAlgebra(Kind kind, int k) : kind_(kind), k_(k) {
    if (k < 1) throw std::invalid_argument("size must be positive");
    switch (kind_) {
      case Kind::SymReal: {
        for (int i = 0; i < k; ++i)
          for (int j = i; j < k; ++j) {
            QMat m(k, k);
            m(i, j) = m(j, i) = 1;
            basis_.push_back(m);
            anchors_.push_back({i, j, Rat(1)});
          }
        unit_.assign(dim(), Rat(0));
        for (int i = 0, b = 0; i < k; ++i)
          for (int j = i; j < k; ++j, ++b)
            if (i == j) unit_[b] = 1;
        break;
      }
      case Kind::HermComplex: {
        // complex z = a + ib as the real 2x2 block [[a,-b],[b,a]]
        auto unit_block = [&](int re, int im) {
          QMat m(2, 2);
          m(0, 0) = re;
          m(1, 1) = re;
          m(0, 1) = -im;
          m(1, 0) = im;
          return m;
        };
        auto place = [&](int i, int j, const QMat& blk) {
          QMat m(2 * k, 2 * k);
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
              m(2 * i + a, 2 * j + b) = blk(a, b);
              // hermitian: the (j,i) block is the conjugate transpose
              m(2 * j + a, 2 * i + b) = blk(b, a);
            }
          return m;
        };
        for (int i = 0; i < k; ++i) {
          QMat m(2 * k, 2 * k);
          m(2 * i, 2 * i) = m(2 * i + 1, 2 * i + 1) = 1;
          basis_.push_back(m);
          anchors_.push_back({2 * i, 2 * i, Rat(1)});
        }
        for (int i = 0; i < k; ++i)
          for (int j = i + 1; j < k; ++j) {
            basis_.push_back(place(i, j, unit_block(1, 0)));
            anchors_.push_back({2 * i, 2 * j, Rat(1)});
            basis_.push_back(place(i, j, unit_block(0, 1)));
            anchors_.push_back({2 * i + 1, 2 * j, Rat(1)});
          }
        unit_.assign(dim(), Rat(0));
        for (int i = 0; i < k; ++i) unit_[i] = 1;
        break;
      }
      case Kind::HermQuat: {
        for (int i = 0; i < k; ++i) {
          QMat m(4 * k, 4 * k);
          for (int a = 0; a < 4; ++a) m(4 * i + a, 4 * i + a) = 1;
          basis_.push_back(m);
          anchors_.push_back({4 * i, 4 * i, Rat(1)});
        }
        for (int i = 0; i < k; ++i)
          for (int j = i + 1; j < k; ++j)
            for (int u = 0; u < 4; ++u) {
              QMat blk = quat_block(u);
              QMat m(4 * k, 4 * k);
              for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) {
                  m(4 * i + a, 4 * j + b) = blk(a, b);
                  m(4 * j + a, 4 * i + b) = blk(b, a); // conjugate transpose
                }
              basis_.push_back(m);
              anchors_.push_back({4 * i, 4 * j + u, Rat(1)});
            }
        unit_.assign(dim(), Rat(0));
        for (int i = 0; i < k; ++i) unit_[i] = 1;
        break;
      }
      case Kind::Spin: {
        unit_.assign(k_ + 1, Rat(0));
        unit_[k_] = 1;
        break;
      }
    }
  }

  /// 4x4 real blocks of the quaternion units 1, i1, i2, i3.
  static QMat quat_block(int u) {
    static const int rows[4][4][4] = {
        {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}},
        {{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}},
        {{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}},
        {{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}};
    QMat m(4, 4);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) m(a, b) = rows[u][a][b];
    return m;
  }

  Kind kind_;
  int k_;
  std::vector<QMat> basis_;
  std::vector<std::tuple<int, int, Rat>> anchors_;
  Weight unit_;

public:
  int dim_of_kind() const {
    switch (kind_) {
      case Kind::SymReal: return k_ * (k_ + 1) / 2;
      case Kind::HermComplex: return k_ * k_;
      case Kind::HermQuat: return k_ * (2 * k_ - 1);
      case Kind::Spin: return k_ + 1;
    }
    return 0;
  }
};

inline JordanAlgebra make_jordan(const std::string& kind, int size) {
  if (kind == "sym_real") return JordanAlgebra::sym_real(size);
  if (kind == "herm_complex") return JordanAlgebra::herm_complex(size);
  if (kind == "herm_quat") return JordanAlgebra::herm_quat(size);
  if (kind == "spin") return JordanAlgebra::spin(size);
  throw std::invalid_argument("unknown Jordan kind: " + kind);
}

struct PeirceTriple {
  std::vector<Weight> zero, half, one; // eigenspace bases
};

namespace detail {

/// Exact kernel basis of a rational matrix.
inline std::vector<Weight> kernel_basis(QMat m) {
  std::size_t rows = m.rows(), cols = m.cols();
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(rank, j));
    Rat d = m(rank, col);
    for (std::size_t j = 0; j < cols; ++j) m(rank, j) /= d;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m(i, col) == 0) continue;
      Rat f = m(i, col);
      for (std::size_t j = 0; j < cols; ++j) m(i, j) -= f * m(rank, j);
    }
    pivot_col.push_back(static_cast<int>(col));
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<Weight> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Weight v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace detail

/// Eigenspaces {0, 1/2, 1} of multiplication by an idempotent; their
/// dimensions must exhaust the algebra (Peirce decomposition).
inline PeirceTriple peirce(const JordanAlgebra& J, const Weight& e) {
  if (J.product(e, e) != e) throw std::invalid_argument("peirce requires an idempotent");
  QMat L = J.mult_operator(e);
  PeirceTriple t;
  const std::array<Rat, 3> evs = {Rat(0), rat(1, 2), Rat(1)};
  std::array<std::vector<Weight>*, 3> out = {&t.zero, &t.half, &t.one};
  std::size_t total = 0;
  for (int k = 0; k < 3; ++k) {
    QMat shifted = L - evs[k] * QMat::identity(J.dim());
    *out[k] = detail::kernel_basis(shifted);
    total += out[k]->size();
  }
  if (total != static_cast<std::size_t>(J.dim()))
    throw std::domain_error("multiplication by the idempotent has an eigenvalue outside {0,1/2,1}");
  return t;
}

/// Quaternionic frame J_1, J_2, J_3 on R^{4n} as block-diagonal copies of
/// the paper's 4x4 matrices; J_a J_b = -delta_ab id + eps_abc J_c.
struct QuatFrame {
  int n = 0;
  std::array<QMat, 3> J;

  explicit QuatFrame(int n_) : n(n_) {
    static const int j1[4][4] = {{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
    static const int j2[4][4] = {{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}};
    static const int j3[4][4] = {{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}};
    const int(*blocks[3])[4] = {j1, j2, j3};
    for (int q = 0; q < 3; ++q) {
      QMat m(4 * n, 4 * n);
      for (int blk = 0; blk < n; ++blk)
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) m(4 * blk + a, 4 * blk + b) = blocks[q][a][b];
      J[q] = std::move(m);
    }
  }
};

namespace detail {

/// A quaternion (x0,x1,x2,x3) as its 4x4 real matrix.
inline QMat quat_of(const Rat& a0, const Rat& a1, const Rat& a2, const Rat& a3) {
  QMat m(4, 4);
  const Rat z(0);
  const Rat vals[4][4] = {{a0, a1, a2, a3}, {-a1, a0, -a3, a2}, {-a2, a3, a0, -a1},
                          {-a3, -a2, a1, a0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = vals[i][j];
  return m;
}

} // namespace detail

/// The quaternionic Lie bracket [[X,alpha],Y] evaluated two ways: by the
/// closed formula
///   alpha(X)Y + alpha(Y)X - sum_a [alpha(J_a X) J_a Y + alpha(J_a Y) J_a X]
/// and by the raw block-matrix bracket inside sl(n+1,H); the two must agree
/// exactly.  X, Y in R^{4n}, alpha in the dual.
inline Weight quaternionic_bracket(int n, const Weight& X, const Weight& alpha,
                                   const Weight& Y) {
  if (static_cast<int>(X.size()) != 4 * n || static_cast<int>(Y.size()) != 4 * n ||
      static_cast<int>(alpha.size()) != 4 * n)
    throw std::invalid_argument("quaternionic_bracket: vectors must lie in R^{4n}");
  QuatFrame F(n);
  auto pair = [](const Weight& a, const Weight& v) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * v[i];
    return s;
  };
  Weight closed(4 * n, Rat(0));
  Rat ax = pair(alpha, X), ay = pair(alpha, Y);
  for (int i = 0; i < 4 * n; ++i) closed[i] = ax * Y[i] + ay * X[i];
  for (int a = 0; a < 3; ++a) {
    Weight jx = F.J[a].apply(X), jy = F.J[a].apply(Y);
    Rat ajx = pair(alpha, jx), ajy = pair(alpha, jy);
    for (int i = 0; i < 4 * n; ++i) closed[i] -= ajx * jy[i] + ajy * jx[i];
  }

  // block computation in sl(n+1,H): X,Y in the first column, alpha in the
  // first row; the real covector alpha corresponds to quaternion components
  // (a0,-a1,-a2,-a3) so that Re(alpha_i X_i) = alpha(X_i)
  int m = 4 * (n + 1);
  QMat Xm(m, m), Ym(m, m), Am(m, m);
  for (int blk = 0; blk < n; ++blk) {
    QMat qx = detail::quat_of(X[4 * blk], X[4 * blk + 1], X[4 * blk + 2], X[4 * blk + 3]);
    QMat qy = detail::quat_of(Y[4 * blk], Y[4 * blk + 1], Y[4 * blk + 2], Y[4 * blk + 3]);
    QMat qa = detail::quat_of(alpha[4 * blk], -alpha[4 * blk + 1], -alpha[4 * blk + 2],
                              -alpha[4 * blk + 3]);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Xm(4 * (blk + 1) + i, j) = qx(i, j);
        Ym(4 * (blk + 1) + i, j) = qy(i, j);
        Am(i, 4 * (blk + 1) + j) = qa(i, j);
      }
  }
  QMat br = commutator(commutator(Xm, Am), Ym);
  Weight block(4 * n, Rat(0));
  for (int blk = 0; blk < n; ++blk)
    for (int c = 0; c < 4; ++c) block[4 * blk + c] = br(4 * (blk + 1), c);
  if (block != closed)
    throw std::logic_error("quaternionic bracket: block matrix and closed formula disagree");
  return closed;
}

/// The normalized quaternionic algebraic bracket as a 4n x 4n endomorphism.
inline QMat quaternionic_alg_bracket(int n, const Weight& X, const Weight& alpha) {
  QuatFrame F(n);
  QMat m(4 * n, 4 * n);
  auto pair = [](const Weight& a, const Weight& v) {
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * v[i];
    return s;
  };
  Rat ax = pair(alpha, X);
  for (int i = 0; i < 4 * n; ++i) {
    m(i, i) += ax / 2;
    for (int j = 0; j < 4 * n; ++j) m(i, j) += X[i] * alpha[j] / 2;
  }
  for (int a = 0; a < 3; ++a) {
    Weight jx = F.J[a].apply(X);
    Rat ajx = pair(alpha, jx);
    // alpha(J_a Y) = (J_a^T alpha)(Y)
    Weight jta = F.J[a].transpose().apply(alpha);
    for (int i = 0; i < 4 * n; ++i) {
      for (int j = 0; j < 4 * n; ++j) {
        m(i, j) -= ajx * F.J[a](i, j) / 2;
        m(i, j) -= jx[i] * jta[j] / 2;
      }
    }
  }
  return m;
}

} // namespace paralie

#endif
