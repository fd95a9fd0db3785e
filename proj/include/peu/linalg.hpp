// linalg.hpp — dense real symmetric linear algebra
//
// Small self-contained kernel: inner products, symmetric matrices, and a
// cyclic Jacobi eigensolver. Dimensions are desk-scale (a few hundred at
// most), so everything is plain dense storage with no external dependency.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace peu::linalg {

using Vec = std::vector<double>;

// Sum x_i y_i. Throws std::invalid_argument on length mismatch.
double inner(const Vec& x, const Vec& y);

// Euclidean norm.
double norm(const Vec& x);

// Symmetric n-by-n matrix. Symmetry is a storage invariant: the constructor
// either mirrors the strict upper triangle exactly or rejects input whose
// asymmetry exceeds 1e-9.
class SymMatrix {
 public:
    explicit SymMatrix(std::size_t n);
    explicit SymMatrix(const std::vector<Vec>& rows);

    static SymMatrix diagonal(const Vec& d);

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    // Sets both (i,j) and (j,i) to v.
    void set(std::size_t i, std::size_t j, double v);

    double trace() const;
    // Largest |a_ij| over i != j.
    double off_diag_max_abs() const;
    // Frobenius norm of the strict off-diagonal part.
    double off_diag_frobenius() const;
    double max_abs_diff(const SymMatrix& other) const;

    // y = A x.
    Vec apply(const Vec& x) const;
    // x' A x.
    double quad_form(const Vec& x) const;

    // Principal submatrix on the given (sorted, distinct) indices.
    SymMatrix principal_submatrix(const std::vector<std::size_t>& idx) const;

 private:
    std::size_t n_;
    Vec a_;  // row-major n*n, kept exactly symmetric
};

// Eigenvalues in descending order; eigenvector row i pairs with eigenvalue i.
// Rows are orthonormal and sign-fixed (first component of magnitude > 1e-12
// is nonnegative).
struct SpectralDecomposition {
    Vec eigenvalues;
    std::vector<Vec> eigenvectors;  // rows of P, with  U = P' D P
};

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Cyclic Jacobi diagonalization. Sweeps until the off-diagonal Frobenius
// norm drops below 1e-12, capped at 100 sweeps (cap exceeded throws
// ConvergenceError; this does not happen for sanely scaled input).
SpectralDecomposition eigh(const SymMatrix& m);

// P' D P. Inverse of eigh up to floating-point error.
SymMatrix reconstruct(const SpectralDecomposition& d);

// U = P' D P for an arbitrary orthonormal row set P and payoffs D.
// Orthonormality is the caller's responsibility here; the public lottery
// Basis type enforces it.
SymMatrix compose_spectrum(const Vec& payoffs, const std::vector<Vec>& rows);

}  // namespace peu::linalg
