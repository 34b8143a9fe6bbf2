#pragma once

#include <span>
#include <vector>

#include "formrank/gf.hpp"

namespace formrank::linalg {

using gf::Elt;

/// Dense row-major matrix over GF(q). Exact arithmetic only; rank/det/
/// nullspace kernels require q <= 512 (table-backed fields).
class Mat {
public:
    Mat() = default;
    Mat(gf::Field F, unsigned rows, unsigned cols)
        : F_(std::move(F)), rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, 0) {}

    static Mat identity(gf::Field F, unsigned n);

    const gf::Field& field() const { return F_; }
    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }

    Elt& operator()(unsigned i, unsigned j) { return a_[std::size_t(i) * cols_ + j]; }
    Elt operator()(unsigned i, unsigned j) const { return a_[std::size_t(i) * cols_ + j]; }
    std::span<const Elt> row(unsigned i) const { return {a_.data() + std::size_t(i) * cols_, cols_}; }
    std::span<const Elt> flat() const { return a_; }
    std::span<Elt> flat_mut() { return a_; }

    bool is_zero() const;
    bool is_symmetric() const;
    /// A == -A^T with zero diagonal (in characteristic 2 this reads:
    /// symmetric with zero diagonal).
    bool is_alternating() const;

    Mat transposed() const;
    /// *this += c * B
    void add_scaled(const Mat& B, Elt c);

    friend bool operator==(const Mat&, const Mat&) = default;

private:
    gf::Field F_;
    unsigned rows_ = 0, cols_ = 0;
    std::vector<Elt> a_;
};

/// Row rank by Gaussian elimination (first nonzero pivot in column order).
/// Packs rows into machine words for GF(2) when cols <= 64.
unsigned rank(const Mat& A);

/// Forward elimination on a caller-owned scratch buffer; destroys data.
unsigned rank_destructive(const gf::FieldOps& ops, Elt* data, unsigned rows, unsigned cols);
unsigned rank_destructive_gf2(std::uint64_t* rows, unsigned nrows);

gf::Elt det(const Mat& A);

/// Pfaffian of an alternating matrix of even dimension: recursive expansion
/// along the first row for n <= 8, skew-symmetric elimination beyond.
/// Throws std::invalid_argument for non-alternating input or odd n.
gf::Elt pfaffian(const Mat& A);

/// Subspace of GF(q)^n held as a reduced-row-echelon basis; equal subspaces
/// compare equal element-wise, so Subspace values are usable as map keys.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(gf::Field F, unsigned ambient);
    static Subspace from_vectors(const gf::Field& F, unsigned ambient,
                                 const std::vector<std::vector<Elt>>& vectors);
    static Subspace from_flat(const gf::Field& F, unsigned ambient,
                              std::span<const Elt> data, unsigned nrows);

    const gf::Field& field() const { return F_; }
    unsigned ambient() const { return ambient_; }
    unsigned dim() const { return dim_; }
    std::span<const Elt> basis_row(unsigned i) const {
        return {rows_.data() + std::size_t(i) * ambient_, ambient_};
    }
    std::span<const Elt> rows_flat() const { return rows_; }

    bool contains(std::span<const Elt> v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }
    friend bool operator<(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
        if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
        return a.rows_ < b.rows_;
    }

private:
    gf::Field F_;
    unsigned ambient_ = 0, dim_ = 0;
    std::vector<Elt> rows_;  // dim x ambient, reduced echelon
};

Subspace row_space(const Mat& A);
Subspace right_nullspace(const Mat& A);  // {v : Av = 0}
Subspace left_nullspace(const Mat& A);   // {u : u^T A = 0}

Subspace sum(const Subspace& U, const Subspace& W);
Subspace intersect(const Subspace& U, const Subspace& W);

/// All subspaces of GF(q)^ambient of the given dimension, enumerated via
/// reduced-echelon representatives, in deterministic order.
std::vector<Subspace> all_subspaces(const gf::Field& F, unsigned ambient, unsigned dim);

/// Gaussian binomial [n, k]_q as a check value for subspace counts.
std::uint64_t gaussian_binomial(std::uint64_t q, unsigned n, unsigned k);

}  // namespace formrank::linalg
