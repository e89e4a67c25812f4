#include "hrc/jacobi.hpp"

#include <algorithm>
#include <cmath>

namespace hrc {

namespace {

double off_diagonal_norm(const SymmetricMatrix &a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (i != j)
        s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

double frobenius_norm(const SymmetricMatrix &a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// Apply the rotation annihilating a(p,q) to rows/columns p and q.
void rotate(SymmetricMatrix &a, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  if (apq == 0.0)
    return;
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q)
      continue;
    const double akp = a(k, p);
    const double akq = a(k, q);
    const double new_kp = c * akp - s * akq;
    const double new_kq = s * akp + c * akq;
    a(k, p) = a(p, k) = new_kp;
    a(k, q) = a(q, k) = new_kq;
  }
  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = a(q, p) = 0.0;
}

} // namespace

JacobiResult jacobi_eigenvalues(SymmetricMatrix a, double rel_tol,
                                int max_sweeps) {
  JacobiResult result;
  const std::size_t n = a.size();
  const double norm = frobenius_norm(a);
  const double target = rel_tol * norm;

  if (norm == 0.0 || off_diagonal_norm(a) <= target) {
    result.converged = true;
  } else {
    for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
      for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
          rotate(a, p, q);
      result.sweeps = sweep;
      if (off_diagonal_norm(a) <= target) {
        result.converged = true;
        break;
      }
    }
  }

  result.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    result.eigenvalues[i] = a(i, i);
  std::sort(result.eigenvalues.begin(), result.eigenvalues.end());
  return result;
}

} // namespace hrc
