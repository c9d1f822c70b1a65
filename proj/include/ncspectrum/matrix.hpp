#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ncspectrum/scalar.hpp"

namespace ncs {

/// Dense row-major matrix over Q(i). Immutable in spirit: every operation
/// returns a fresh value.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols);
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries);
    ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

    static ExactMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static ExactMatrix identity(std::size_t n);
    static ExactMatrix diagonal(const std::vector<GaussianRational>& diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const std::vector<GaussianRational>& entries() const { return entries_; }

    const GaussianRational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_identity() const;
    GaussianRational trace() const;

    ExactMatrix adjoint() const;
    ExactMatrix scaled(const GaussianRational& s) const;

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

    /// Deterministic total order: shape first, then entries row-major with the
    /// larger entry first. Puts e11 before e22.
    friend std::strong_ordering operator<=>(const ExactMatrix& a, const ExactMatrix& b);

    std::string to_string() const;

private:
    friend class MatrixBuilder;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> entries_;
};

/// Mutable scratch space for assembling a matrix entry by entry.
class MatrixBuilder {
public:
    MatrixBuilder(std::size_t rows, std::size_t cols) : m_(rows, cols) {}
    explicit MatrixBuilder(ExactMatrix start) : m_(std::move(start)) {}
    GaussianRational& at(std::size_t r, std::size_t c) { return m_.entries_[r * m_.cols_ + c]; }
    ExactMatrix build() && { return std::move(m_); }

private:
    ExactMatrix m_;
};

enum class MatrixOp { add, mul, adjoint };

/// Exact add/mul/adjoint; adjoint ignores `b`. Throws std::invalid_argument on
/// incompatible shapes.
ExactMatrix matrix_arith(const ExactMatrix& a, const ExactMatrix& b, MatrixOp op);

/// Rank over Q(i) by fraction-exact Gaussian elimination.
std::size_t rank(const ExactMatrix& m);

struct Classification {
    bool projection = false;
    bool unitary = false;

    /// "projection", "unitary", "projection+unitary" or "neither".
    std::string label() const;
};

/// Flags m = m* = m^2 and m m* = I. Throws std::invalid_argument for
/// non-square input.
Classification classify(const ExactMatrix& m);

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace ncs
