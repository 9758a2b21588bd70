#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "hyper/soscert.hpp"

namespace hyper {

namespace {

// Upper triangle with off-diagonal entries weighted by sqrt(2), so that the
// Euclidean norm of the vector is the Frobenius norm of the matrix.
Eigen::VectorXd pack(const Eigen::MatrixXd& g) {
  const double r2 = std::sqrt(2.0);
  Eigen::Index n = g.rows();
  Eigen::VectorXd v(n * (n + 1) / 2);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) v(k++) = i == j ? g(i, j) : r2 * g(i, j);
  return v;
}

Eigen::MatrixXd unpack(const Eigen::VectorXd& v, Eigen::Index n) {
  const double r2 = std::sqrt(2.0);
  Eigen::MatrixXd g(n, n);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i; j < n; ++j) {
      double x = i == j ? v(k) : v(k) / r2;
      g(i, j) = x;
      g(j, i) = x;
      ++k;
    }
  return g;
}

Eigen::MatrixXd to_dense(const RationalMatrix& m) {
  Eigen::MatrixXd d(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d(i, j) = m(i, j).get_d();
  return d;
}

double min_eigenvalue(const Eigen::MatrixXd& g) {
  if (g.rows() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace

SdpResult solve_sdp(const GramSystem& sys, const SdpSettings& settings) {
  SdpResult out;
  Eigen::Index n = static_cast<Eigen::Index>(sys.size());
  std::size_t m = sys.dimension();
  if (!sys.consistent) {
    out.diagnostics = "inconsistent Gram system";
    return out;
  }

  Eigen::VectorXd g0 = pack(to_dense(sys.particular));
  Eigen::MatrixXd basis(g0.size(), static_cast<Eigen::Index>(m));
  for (std::size_t k = 0; k < m; ++k) basis.col(static_cast<Eigen::Index>(k)) = pack(to_dense(sys.nullspace[k]));
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr;
  Eigen::MatrixXd q;
  if (m > 0) {
    qr.compute(basis);
    q = qr.householderQ() * Eigen::MatrixXd::Identity(g0.size(), qr.rank());
  }

  auto project = [&](const Eigen::VectorXd& y) -> Eigen::VectorXd {
    if (m == 0) return g0;
    return g0 + q * (q.transpose() * (y - g0));
  };

  Eigen::VectorXd x = project(Eigen::VectorXd::Zero(g0.size()));
  double scale = std::max(x.norm() / std::max<double>(1, static_cast<double>(n)), 1e-12);

  auto finish = [&](bool feasible, double lmin) {
    out.feasible = feasible;
    out.min_eigenvalue = lmin;
    Eigen::MatrixXd g = unpack(x, n);
    out.gram.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) out.gram[i][j] = g(i, j);
    out.lambda.assign(m, 0.0);
    if (m > 0) {
      Eigen::VectorXd lam = qr.solve(x - g0);
      for (std::size_t k = 0; k < m; ++k) out.lambda[k] = lam(static_cast<Eigen::Index>(k));
    }
    return out;
  };

  double lmin = min_eigenvalue(unpack(x, n));
  if (m == 0) {
    std::ostringstream d;
    d << "unique Gram matrix, min eigenvalue " << lmin;
    out.diagnostics = d.str();
    return finish(lmin >= -settings.feasibility_tolerance, lmin);
  }

  const double shifts[] = {1e-1, 1e-2, 1e-3, 1e-4, 1e-6};
  unsigned per_stage = std::max(1u, settings.max_iterations / 5);
  Eigen::VectorXd best = x;
  double best_lmin = lmin;
  for (double shift : shifts) {
    double eps = shift * scale;
    for (unsigned it = 0; it < per_stage; ++it) {
      Eigen::MatrixXd g = unpack(x, n);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
      lmin = es.eigenvalues()(0);
      if (lmin > best_lmin) {
        best_lmin = lmin;
        best = x;
      }
      if (lmin >= 0.5 * eps) {
        std::ostringstream d;
        d << "converged after " << out.iterations << " iterations, min eigenvalue " << lmin;
        out.diagnostics = d.str();
        return finish(true, lmin);
      }
      Eigen::VectorXd lam = es.eigenvalues().cwiseMax(eps);
      Eigen::MatrixXd clamped = es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();
      Eigen::VectorXd next = project(pack(clamped));
      ++out.iterations;
      double step = (next - x).norm();
      x = std::move(next);
      if (step < 1e-14 * scale) break;
    }
  }
  x = best;
  std::ostringstream d;
  d << "stalled after " << out.iterations << " iterations, best min eigenvalue " << best_lmin;
  out.diagnostics = d.str();
  return finish(best_lmin >= -settings.feasibility_tolerance, best_lmin);
}

}  // namespace hyper
