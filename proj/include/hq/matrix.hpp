#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hq {

using Complex = std::complex<double>;

/// zeta_d^power = exp(i 2 pi power / d); the exponent is reduced mod d first
/// so large powers do not lose precision.
Complex root_of_unity(std::size_t d, long long power);

/// Dense complex matrix, row-major. The universal carrier for states viewed
/// as column matrices, gates, and density operators.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);  // zero-filled

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(const std::vector<Complex>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::vector<Complex>& entries() { return entries_; }
    const std::vector<Complex>& entries() const { return entries_; }

    bool operator==(const ComplexMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
std::vector<Complex> operator*(const ComplexMatrix& a, const std::vector<Complex>& v);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

/// Kronecker product; entry [(i1*b.rows+i2),(j1*b.cols+j2)] = a[i1,j1]*b[i2,j2].
/// Throws DimensionError if the result dimensions overflow the desk-scale cap.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// a^n for square a, n >= 0 (a^0 = I).
ComplexMatrix matrix_power(const ComplexMatrix& a, std::size_t n);

Complex trace(const ComplexMatrix& a);

/// Hilbert-Schmidt inner product tr(a^dagger b).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hilbert-Schmidt (Frobenius) norm.
double hs_norm(const ComplexMatrix& a);

/// Largest entry modulus.
double max_abs(const ComplexMatrix& a);

/// Largest entry modulus of a - b; shapes must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// min over unit phi of max-entry |a - phi*b|, with phi recovered from
/// tr(b^dagger a); falls back to plain distance when the trace vanishes.
double max_entry_distance_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b);

/// Max-entry norm of (m^dagger m - I) <= tol.
bool is_unitary(const ComplexMatrix& m, double tol = 1e-10);

}  // namespace hq
