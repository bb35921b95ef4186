#pragma once

#include <atlas/eigen_rational.hpp>
#include <atlas/error.hpp>
#include <atlas/numeric.hpp>

#include <Eigen/Core>

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

namespace atlas::curvature {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
inline constexpr bool is_exact_v = !std::is_floating_point_v<Scalar>;

template <class Scalar>
Scalar abs_value(const Scalar& x) {
  if constexpr (is_exact_v<Scalar>) {
    return x < 0 ? Scalar(-x) : x;
  } else {
    return std::abs(x);
  }
}

/// Tolerance for treating a value as zero: exact zero for rationals.
template <class Scalar>
bool is_zero(const Scalar& x, double tol = 1e-12) {
  if constexpr (is_exact_v<Scalar>) {
    return x == 0;
  } else {
    return std::abs(x) <= tol;
  }
}

/// A Lie algebra with a left-invariant metric on a chosen frame e_0..e_{dim-1}.
///
/// brackets[k](i, j) is the structure constant c^k_{ij}, so that
/// [e_i, e_j] = sum_k c^k_{ij} e_k. The frame vector e_reeb plays the Reeb
/// field; its metric dual eta = g(e_reeb, .) is the contact form.
template <class Scalar>
struct MetricAlgebra {
  std::vector<Matrix<Scalar>> brackets;
  Matrix<Scalar> metric;
  Eigen::Index reeb = 0;

  Eigen::Index dim() const { return metric.rows(); }

  /// [v, w] for frame coordinate vectors.
  Vector<Scalar> bracket(const Vector<Scalar>& v, const Vector<Scalar>& w) const {
    Vector<Scalar> out(dim());
    for (Eigen::Index k = 0; k < dim(); ++k) out(k) = v.dot(brackets[k] * w);
    return out;
  }

  /// eta(e_i) = g(xi, e_i).
  Vector<Scalar> eta() const { return metric.row(reeb).transpose(); }
};

/// Throws InvalidInput unless the structure constants are antisymmetric and
/// satisfy the Jacobi identity, the metric is symmetric, and reeb is a valid
/// index. Positive definiteness is checked by `ricci`.
template <class Scalar>
void validate(const MetricAlgebra<Scalar>& alg, double tol = 1e-9) {
  const auto n = alg.dim();
  if (n < 1 || alg.metric.cols() != n || static_cast<Eigen::Index>(alg.brackets.size()) != n)
    throw Error(ErrorKind::InvalidInput, "metric and structure constants disagree on dimension");
  if (alg.reeb < 0 || alg.reeb >= n) throw Error(ErrorKind::InvalidInput, "reeb index out of range");
  for (const auto& c : alg.brackets) {
    if (c.rows() != n || c.cols() != n)
      throw Error(ErrorKind::InvalidInput, "structure constant block has wrong shape");
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        if (!is_zero<Scalar>(c(i, j) + c(j, i), tol))
          throw Error(ErrorKind::InvalidInput, "structure constants are not antisymmetric");
  }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (!is_zero<Scalar>(alg.metric(i, j) - alg.metric(j, i), tol))
        throw Error(ErrorKind::InvalidInput, "metric is not symmetric");

  // sum over cyclic (i,j,k) of [[e_i, e_j], e_k] = 0
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        for (Eigen::Index m = 0; m < n; ++m) {
          Scalar s = 0;
          for (Eigen::Index l = 0; l < n; ++l) {
            s += alg.brackets[l](i, j) * alg.brackets[m](l, k);
            s += alg.brackets[l](j, k) * alg.brackets[m](l, i);
            s += alg.brackets[l](k, i) * alg.brackets[m](l, j);
          }
          if (!is_zero<Scalar>(s, tol))
            throw Error(ErrorKind::InvalidInput, "structure constants violate the Jacobi identity");
        }
}

/// Inverse of a symmetric positive-definite matrix by Gauss-Jordan elimination.
/// Throws DegenerateMetric if singular, InvalidInput if not positive definite.
template <class Scalar>
Matrix<Scalar> invert_metric(const Matrix<Scalar>& g, double tol = 1e-12) {
  const auto n = g.rows();
  Matrix<Scalar> a = g;
  Matrix<Scalar> inv = Matrix<Scalar>::Identity(n, n);
  // Leading pivots without row swaps are the ratios of leading principal
  // minors, so all pivots positive <=> positive definite.
  for (Eigen::Index c = 0; c < n; ++c) {
    if (is_zero<Scalar>(a(c, c), tol)) {
      throw Error(ErrorKind::DegenerateMetric, "metric is degenerate");
    }
    if (a(c, c) < 0) throw Error(ErrorKind::InvalidInput, "metric is not positive definite");
    const Scalar p = a(c, c);
    a.row(c) /= p;
    inv.row(c) /= p;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || is_zero<Scalar>(a(r, c), 0.0)) continue;
      const Scalar f = a(r, c);
      a.row(r) -= f * a.row(c);
      inv.row(r) -= f * inv.row(c);
    }
  }
  return inv;
}

/// Levi-Civita connection of a left-invariant metric, one matrix per frame
/// direction: nabla_{e_i} v = connection[i] * v. From the Koszul formula
/// 2 g(nabla_i e_j, e_k) = g([e_i,e_j],e_k) - g([e_j,e_k],e_i) + g([e_k,e_i],e_j).
template <class Scalar>
std::vector<Matrix<Scalar>> connection(const MetricAlgebra<Scalar>& alg) {
  const auto n = alg.dim();
  const Matrix<Scalar> ginv = invert_metric(alg.metric);

  // lowered(i, j, k) = g([e_i, e_j], e_k) = sum_m c^m_ij g_mk
  auto lowered = [&](Eigen::Index i, Eigen::Index j, Eigen::Index k) {
    Scalar s = 0;
    for (Eigen::Index m = 0; m < n; ++m) s += alg.brackets[m](i, j) * alg.metric(m, k);
    return s;
  };

  std::vector<Matrix<Scalar>> gamma(n, Matrix<Scalar>::Zero(n, n));
  for (Eigen::Index i = 0; i < n; ++i) {
    Matrix<Scalar> koszul(n, n);  // (j, k) -> g(nabla_i e_j, e_k)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        koszul(j, k) = (lowered(i, j, k) - lowered(j, k, i) + lowered(k, i, j)) / 2;
    // column j of gamma[i] holds the frame coordinates of nabla_i e_j
    gamma[i] = ginv * koszul.transpose();
  }
  return gamma;
}

/// Ricci tensor on the frame, Ric(e_j, e_k) = trace(x -> R(x, e_j) e_k) with
/// R(x, y) = [nabla_x, nabla_y] - nabla_{[x, y]}.
template <class Scalar>
Matrix<Scalar> ricci(const MetricAlgebra<Scalar>& alg) {
  validate(alg);
  const auto n = alg.dim();
  const auto gamma = connection(alg);

  Matrix<Scalar> ric = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      Matrix<Scalar> r = gamma[i] * gamma[j] - gamma[j] * gamma[i];
      for (Eigen::Index m = 0; m < n; ++m) {
        if (!is_zero<Scalar>(alg.brackets[m](i, j), 0.0)) r -= alg.brackets[m](i, j) * gamma[m];
      }
      // e_i component of R(e_i, e_j) e_k
      ric.row(j) += r.row(i);
    }
  }
  return ric;
}

/// Best fit of Ric = lambda g + nu eta(x)eta in the Frobenius norm on the frame.
template <class Scalar>
struct RicciFit {
  Scalar lambda;
  Scalar nu;
  Scalar residual;  // max-norm of Ric - lambda g - nu eta(x)eta
  /// max_v |Ric(xi, v) - 2n eta(v)|; present for odd dimension 2n+1.
  std::optional<Scalar> kcontact_residual;
  Matrix<Scalar> ricci;
};

template <class Scalar>
RicciFit<Scalar> eta_fit(const MetricAlgebra<Scalar>& alg) {
  const Matrix<Scalar> ric = ricci(alg);
  const Matrix<Scalar>& g = alg.metric;
  const Vector<Scalar> eta = alg.eta();
  const Matrix<Scalar> ee = eta * eta.transpose();

  const Scalar gg = g.cwiseProduct(g).sum();
  const Scalar ge = g.cwiseProduct(ee).sum();
  const Scalar eee = ee.cwiseProduct(ee).sum();
  const Scalar rg = ric.cwiseProduct(g).sum();
  const Scalar re = ric.cwiseProduct(ee).sum();
  const Scalar det = gg * eee - ge * ge;
  if (is_zero<Scalar>(det)) {
    throw Error(ErrorKind::InvalidInput, "metric and eta(x)eta are proportional; fit is not unique");
  }

  RicciFit<Scalar> fit;
  fit.lambda = (rg * eee - re * ge) / det;
  fit.nu = (gg * re - ge * rg) / det;
  const Matrix<Scalar> diff = ric - fit.lambda * g - fit.nu * ee;
  fit.residual = 0;
  for (Eigen::Index i = 0; i < diff.size(); ++i) {
    const Scalar a = abs_value<Scalar>(diff.data()[i]);
    if (a > fit.residual) fit.residual = a;
  }
  if (alg.dim() % 2 == 1) {
    const Scalar two_n = Scalar(alg.dim() - 1);
    Scalar worst = 0;
    for (Eigen::Index v = 0; v < alg.dim(); ++v) {
      const Scalar a = abs_value<Scalar>(Scalar(ric(alg.reeb, v) - two_n * eta(v)));
      if (a > worst) worst = a;
    }
    fit.kcontact_residual = worst;
  }
  fit.ricci = ric;
  return fit;
}

/// All structure constants zero.
template <class Scalar>
MetricAlgebra<Scalar> abelian(Eigen::Index dim) {
  MetricAlgebra<Scalar> alg;
  alg.brackets.assign(dim, Matrix<Scalar>::Zero(dim, dim));
  alg.metric = Matrix<Scalar>::Identity(dim, dim);
  alg.reeb = dim - 1;
  return alg;
}

/// Heisenberg algebra H(n) on the orthonormal frame X_1..X_n, Y_1..Y_n, xi
/// with [X_i, Y_i] = 2 xi, which carries the null eta-Einstein constants
/// (-2, 2n+2) and satisfies Ric(xi, xi) = 2n.
template <class Scalar>
MetricAlgebra<Scalar> heisenberg(long n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "Heisenberg algebra needs n >= 1");
  const Eigen::Index dim = 2 * n + 1;
  auto alg = abelian<Scalar>(dim);
  const Eigen::Index xi = dim - 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    alg.brackets[xi](i, n + i) = 2;
    alg.brackets[xi](n + i, i) = -2;
  }
  alg.reeb = xi;
  return alg;
}

/// Berger sphere: the D-homothety with scale a of the round SU(2), whose
/// frame satisfies [e_i, e_j] = 2 eps_ijk e_k and Ric = 2g. On the frame
/// (e_1, e_2, xi = e_3 / a) the metric is diag(a, a, 1).
template <class Scalar>
MetricAlgebra<Scalar> berger(const Scalar& a) {
  if (!(a > 0)) throw Error(ErrorKind::NonPositiveScale, "Berger scale must be positive");
  auto alg = abelian<Scalar>(3);
  const Scalar s = Scalar(2) / a;
  alg.brackets[2](0, 1) = 2 * a;   // [e1, e2] = 2 e3 = 2a xi
  alg.brackets[2](1, 0) = -2 * a;
  alg.brackets[0](1, 2) = s;       // [e2, xi] = (2/a) e1
  alg.brackets[0](2, 1) = -s;
  alg.brackets[1](2, 0) = s;       // [xi, e1] = (2/a) e2
  alg.brackets[1](0, 2) = -s;
  alg.metric(0, 0) = a;
  alg.metric(1, 1) = a;
  alg.reeb = 2;
  return alg;
}

template <class Scalar>
Scalar trace_with_inverse(const Matrix<Scalar>& ric, const Matrix<Scalar>& metric) {
  return (invert_metric(metric) * ric).trace();
}

/// Max over samples of |f^2 - alpha df/dz + alpha^2| for f = alpha tan(z + c),
/// alpha^2 = (2n+2)/(2n-1). Throws PoleProximity when z + c is within 1e-6 of
/// a pole of tan.
double ew_function_check(long n, std::span<const double> samples, double c = 0.0);

}  // namespace atlas::curvature
