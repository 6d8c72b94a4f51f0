#include "hq/matrix.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

#include "hq/errors.hpp"

namespace hq {

namespace {

// Hard cap on entries of any materialized matrix (desk scale).
constexpr std::size_t kMaxEntries = std::size_t{1} << 32;

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError(std::string(op) + ": shape mismatch");
    }
}

}  // namespace

Complex root_of_unity(std::size_t d, long long power) {
    if (d == 0) throw DimensionError("root_of_unity: d must be positive");
    long long r = power % static_cast<long long>(d);
    if (r < 0) r += static_cast<long long>(d);
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(d));
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "add");
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.entries().size(); ++i) out.entries()[i] = a.entries()[i] + b.entries()[i];
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "sub");
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.entries().size(); ++i) out.entries()[i] = a.entries()[i] - b.entries()[i];
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw ShapeError("mul: inner dimensions differ");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.entries().size(); ++i) out.entries()[i] = s * a.entries()[i];
    return out;
}

std::vector<Complex> operator*(const ComplexMatrix& a, const std::vector<Complex>& v) {
    if (a.cols() != v.size()) throw ShapeError("matvec: dimension mismatch");
    std::vector<Complex> out(a.rows(), Complex{0.0, 0.0});
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex acc{0.0, 0.0};
        for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (b.rows() != 0 && a.rows() > kMaxEntries / b.rows()) {
        throw DimensionError("kron: row dimension product too large");
    }
    if (b.cols() != 0 && a.cols() > kMaxEntries / b.cols()) {
        throw DimensionError("kron: column dimension product too large");
    }
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    if (cols != 0 && rows > kMaxEntries / cols) {
        throw DimensionError("kron: dimension product too large");
    }
    ComplexMatrix out(rows, cols);
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            const Complex aij = a(i1, j1);
            if (aij == Complex{0.0, 0.0}) continue;
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
                    out(i1 * b.rows() + i2, j1 * b.cols() + j2) = aij * b(i2, j2);
        }
    return out;
}

ComplexMatrix matrix_power(const ComplexMatrix& a, std::size_t n) {
    if (!a.is_square()) throw ShapeError("matrix_power: matrix must be square");
    ComplexMatrix result = ComplexMatrix::identity(a.rows());
    for (std::size_t i = 0; i < n; ++i) result = result * a;
    return result;
}

Complex trace(const ComplexMatrix& a) {
    if (!a.is_square()) throw ShapeError("trace: matrix must be square");
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "hs_inner");
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        acc += std::conj(a.entries()[i]) * b.entries()[i];
    return acc;
}

double hs_norm(const ComplexMatrix& a) {
    double acc = 0.0;
    for (const Complex& e : a.entries()) acc += std::norm(e);
    return std::sqrt(acc);
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const Complex& e : a.entries()) m = std::max(m, std::abs(e));
    return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    return m;
}

double max_entry_distance_up_to_phase(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "max_entry_distance_up_to_phase");
    const Complex overlap = hs_inner(b, a);  // tr(b^dagger a)
    Complex phi{1.0, 0.0};
    if (std::abs(overlap) > 0.0) phi = overlap / std::abs(overlap);
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        m = std::max(m, std::abs(a.entries()[i] - phi * b.entries()[i]));
    return m;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
    if (!m.is_square()) return false;
    const ComplexMatrix gram = dagger(m) * m;
    return max_abs_diff(gram, ComplexMatrix::identity(m.rows())) <= tol;
}

}  // namespace hq
