#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include "tenfold/errors.hpp"

namespace tenfold {

using cplx = std::complex<double>;

/// Dense complex matrix in row-major order. Sized for band Hamiltonians
/// (n <= 16), so everything is by-value and unoptimized on purpose.
class CMatrix {
  public:
    CMatrix() = default;
    explicit CMatrix(int n) : rows_(n), cols_(n), a_(static_cast<size_t>(n) * n) {}
    CMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static CMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    CMatrix adjoint() const;
    CMatrix transpose() const;
    CMatrix conjugate() const;
    cplx trace() const;
    double frobenius_norm() const;
    /// ||A - A^dagger||_F
    double hermiticity_defect() const;
    bool all_finite() const;

    CMatrix& operator+=(const CMatrix& other);
    CMatrix& operator-=(const CMatrix& other);
    CMatrix& operator*=(cplx scale);

    friend CMatrix operator+(CMatrix lhs, const CMatrix& rhs) { return lhs += rhs; }
    friend CMatrix operator-(CMatrix lhs, const CMatrix& rhs) { return lhs -= rhs; }
    friend CMatrix operator*(cplx scale, CMatrix m) { return m *= scale; }
    friend CMatrix operator*(CMatrix m, cplx scale) { return m *= scale; }
    friend CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs);

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> a_;
};

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Pauli matrix by index 0..3 (identity, x, y, z).
CMatrix pauli(int i);

/// Tensor product of Pauli matrices from a string such as "x", "y*x", "0*z".
CMatrix pauli_string(std::string_view spec);

struct EigDecomposition {
    std::vector<double> eigenvalues; // ascending
    CMatrix eigenvectors;            // unitary, columns are eigenvectors
};

struct JacobiOptions {
    int max_sweeps = 100;
    double hermitian_rtol = 1e-10;
};

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix.
EigDecomposition eig_hermitian(const CMatrix& a, const JacobiOptions& options = {});

/// Determinant via LU with partial pivoting.
cplx det(CMatrix a);

/// Pfaffian of a real antisymmetric matrix of even dimension <= 8,
/// by recursive expansion along the first row. The input may carry
/// imaginary parts below `tol`; they are discarded after validation.
double pfaffian(const CMatrix& a, double tol = 1e-9);

/// ||A^dagger A - I||_F
double unitary_distance(const CMatrix& a);

} // namespace tenfold
