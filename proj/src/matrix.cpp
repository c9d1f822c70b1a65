#include "ncspectrum/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace ncs {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols)
        throw std::invalid_argument("matrix entry count does not match its shape");
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m.entries_[k * n + k] = 1;
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<GaussianRational>& diag) {
    ExactMatrix m(diag.size(), diag.size());
    for (std::size_t k = 0; k < diag.size(); ++k) m.entries_[k * diag.size() + k] = diag[k];
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool ExactMatrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto& e = (*this)(r, c);
            if (r == c ? !e.is_one() : !e.is_zero()) return false;
        }
    return true;
}

GaussianRational ExactMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
    GaussianRational t;
    for (std::size_t k = 0; k < rows_; ++k) t += (*this)(k, k);
    return t;
}

ExactMatrix ExactMatrix::adjoint() const {
    ExactMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.entries_[c * rows_ + r] = (*this)(r, c).conj();
    return out;
}

ExactMatrix ExactMatrix::scaled(const GaussianRational& s) const {
    ExactMatrix out = *this;
    for (auto& e : out.entries_)
        if (!e.is_zero()) e *= s;
    return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("dimension mismatch in matrix add");
    ExactMatrix out = a;
    for (std::size_t k = 0; k < out.entries_.size(); ++k)
        if (!b.entries_[k].is_zero()) out.entries_[k] += b.entries_[k];
    return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("dimension mismatch in matrix subtract");
    ExactMatrix out = a;
    for (std::size_t k = 0; k < out.entries_.size(); ++k)
        if (!b.entries_[k].is_zero()) out.entries_[k] -= b.entries_[k];
    return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in matrix multiply");
    ExactMatrix out(a.rows_, b.cols_);
    // Operands are mostly sparse projections and permutations.
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const auto& bkj = b(k, j);
                if (bkj.is_zero()) continue;
                out.entries_[i * b.cols_ + j] += aik * bkj;
            }
        }
    return out;
}

std::strong_ordering operator<=>(const ExactMatrix& a, const ExactMatrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
        if (auto c = b.entries_[k] <=> a.entries_[k]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::string ExactMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).to_string();
        os << ']';
    }
    os << ']';
    return os.str();
}

ExactMatrix matrix_arith(const ExactMatrix& a, const ExactMatrix& b, MatrixOp op) {
    switch (op) {
        case MatrixOp::add: return a + b;
        case MatrixOp::mul: return a * b;
        case MatrixOp::adjoint: return a.adjoint();
    }
    throw std::invalid_argument("unknown matrix op");
}

std::size_t rank(const ExactMatrix& m) {
    std::vector<GaussianRational> w = m.entries();
    const std::size_t rows = m.rows(), cols = m.cols();
    auto at = [&](std::size_t r, std::size_t c) -> GaussianRational& { return w[r * cols + c]; };
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && at(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(at(p, j), at(r, j));
        GaussianRational inv = at(r, c).inverse();
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (at(i, c).is_zero()) continue;
            GaussianRational f = at(i, c) * inv;
            for (std::size_t j = c; j < cols; ++j)
                if (!at(r, j).is_zero()) at(i, j) -= f * at(r, j);
        }
        ++r;
    }
    return r;
}

std::string Classification::label() const {
    if (projection && unitary) return "projection+unitary";
    if (projection) return "projection";
    if (unitary) return "unitary";
    return "neither";
}

Classification classify(const ExactMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("classify expects a square matrix");
    ExactMatrix adj = m.adjoint();
    Classification out;
    out.projection = adj == m && m * m == m;
    out.unitary = (m * adj).is_identity();
    return out;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
    MatrixBuilder out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto& aij = a(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) out.at(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return std::move(out).build();
}

}  // namespace ncs
