#pragma once

#include <cstddef>
#include <vector>

namespace hrc {

/// Dense symmetric matrix stored row-major.
class SymmetricMatrix {
public:
  explicit SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const noexcept { return n_; }
  double &operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }

private:
  std::size_t n_;
  std::vector<double> data_;
};

struct JacobiResult {
  std::vector<double> eigenvalues; // ascending
  int sweeps = 0;
  bool converged = false;
};

/// Cyclic Jacobi eigenvalue iteration. Stops once the off-diagonal Frobenius
/// norm drops below rel_tol times the Frobenius norm of the input, or after
/// max_sweeps sweeps.
JacobiResult jacobi_eigenvalues(SymmetricMatrix a, double rel_tol = 1e-12,
                                int max_sweeps = 100);

} // namespace hrc
