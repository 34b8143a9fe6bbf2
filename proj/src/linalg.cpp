#include "formrank/linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace formrank::linalg {

Mat Mat::identity(gf::Field F, unsigned n) {
    Mat m(std::move(F), n, n);
    for (unsigned i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Mat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](Elt e) { return e == 0; });
}

bool Mat::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool Mat::is_alternating() const {
    if (rows_ != cols_) return false;
    for (unsigned i = 0; i < rows_; ++i) {
        if ((*this)(i, i) != 0) return false;
        for (unsigned j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != F_.neg((*this)(j, i))) return false;
    }
    return true;
}

Mat Mat::transposed() const {
    Mat t(F_, cols_, rows_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

void Mat::add_scaled(const Mat& B, Elt c) {
    if (B.rows_ != rows_ || B.cols_ != cols_) throw std::invalid_argument("shape mismatch");
    if (!c) return;
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = F_.add(a_[i], F_.mul(c, B.a_[i]));
}

unsigned rank_destructive(const gf::FieldOps& ops, Elt* a, unsigned rows, unsigned cols) {
    unsigned rank = 0;
    for (unsigned col = 0; col < cols && rank < rows; ++col) {
        unsigned piv = rank;
        while (piv < rows && a[std::size_t(piv) * cols + col] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (unsigned c = col; c < cols; ++c)
                std::swap(a[std::size_t(piv) * cols + c], a[std::size_t(rank) * cols + c]);
        const Elt* prow = a + std::size_t(rank) * cols;
        Elt pv = prow[col];
        for (unsigned r = rank + 1; r < rows; ++r) {
            Elt* rrow = a + std::size_t(r) * cols;
            Elt f = rrow[col];
            if (!f) continue;
            Elt m = ops.neg(ops.div(f, pv));
            rrow[col] = 0;
            for (unsigned c = col + 1; c < cols; ++c)
                rrow[c] = ops.add(rrow[c], ops.mul(m, prow[c]));
        }
        ++rank;
    }
    return rank;
}

unsigned rank_destructive_gf2(std::uint64_t* rows, unsigned nrows) {
    unsigned rank = 0;
    while (nrows > rank) {
        // leading bit of each remaining row drives elimination in column order
        int best = -1;
        int best_bit = 64;
        for (unsigned r = rank; r < nrows; ++r) {
            if (!rows[r]) continue;
            int b = std::countr_zero(rows[r]);
            if (b < best_bit) {
                best_bit = b;
                best = static_cast<int>(r);
            }
        }
        if (best < 0) break;
        std::swap(rows[rank], rows[best]);
        std::uint64_t prow = rows[rank];
        for (unsigned r = rank + 1; r < nrows; ++r)
            if (rows[r] & (1ull << best_bit)) rows[r] ^= prow;
        ++rank;
    }
    return rank;
}

unsigned rank(const Mat& A) {
    const unsigned rows = A.rows(), cols = A.cols();
    if (!rows || !cols) return 0;
    if (A.field().order() == 2 && cols <= 64) {
        std::vector<std::uint64_t> packed(rows, 0);
        for (unsigned i = 0; i < rows; ++i)
            for (unsigned j = 0; j < cols; ++j)
                if (A(i, j)) packed[i] |= 1ull << j;
        return rank_destructive_gf2(packed.data(), rows);
    }
    std::vector<Elt> scratch(A.flat().begin(), A.flat().end());
    return rank_destructive(A.field().ops(), scratch.data(), rows, cols);
}

gf::Elt det(const Mat& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const unsigned n = A.rows();
    const gf::Field& F = A.field();
    std::vector<Elt> a(A.flat().begin(), A.flat().end());
    Elt result = 1;
    for (unsigned col = 0; col < n; ++col) {
        unsigned piv = col;
        while (piv < n && a[std::size_t(piv) * n + col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            for (unsigned c = 0; c < n; ++c)
                std::swap(a[std::size_t(piv) * n + c], a[std::size_t(col) * n + c]);
            result = F.neg(result);
        }
        Elt pv = a[std::size_t(col) * n + col];
        result = F.mul(result, pv);
        for (unsigned r = col + 1; r < n; ++r) {
            Elt f = a[std::size_t(r) * n + col];
            if (!f) continue;
            Elt m = F.neg(F.div(f, pv));
            for (unsigned c = col; c < n; ++c)
                a[std::size_t(r) * n + c] = F.add(a[std::size_t(r) * n + c], F.mul(m, a[std::size_t(col) * n + c]));
        }
    }
    return result;
}

namespace {

gf::Elt pfaffian_recursive(const gf::Field& F, const Mat& A, std::vector<unsigned>& idx) {
    const std::size_t m = idx.size();
    if (m == 0) return 1;
    if (m == 2) return A(idx[0], idx[1]);
    unsigned i0 = idx[0];
    Elt acc = 0;
    bool plus = true;
    for (std::size_t t = 1; t < m; ++t) {
        Elt a = A(i0, idx[t]);
        if (a) {
            std::vector<unsigned> rest;
            rest.reserve(m - 2);
            for (std::size_t s = 1; s < m; ++s)
                if (s != t) rest.push_back(idx[s]);
            Elt term = F.mul(a, pfaffian_recursive(F, A, rest));
            acc = F.add(acc, plus ? term : F.neg(term));
        }
        plus = !plus;
    }
    return acc;
}

gf::Elt pfaffian_eliminate(const gf::Field& F, Mat a) {
    const unsigned n = a.rows();
    Elt result = 1;
    for (unsigned k = 0; k + 1 < n; k += 2) {
        unsigned piv = k + 1;
        while (piv < n && a(k, piv) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k + 1) {
            for (unsigned c = 0; c < n; ++c) std::swap(a(k + 1, c), a(piv, c));
            for (unsigned r = 0; r < n; ++r) std::swap(a(r, k + 1), a(r, piv));
            result = F.neg(result);
        }
        Elt pv = a(k, k + 1);
        result = F.mul(result, pv);
        if (k + 2 >= n) break;
        std::vector<Elt> tau(n, 0);
        for (unsigned i = k + 2; i < n; ++i) tau[i] = F.div(a(k, i), pv);
        for (unsigned i = k + 2; i < n; ++i) {
            for (unsigned j = k + 2; j < n; ++j) {
                // congruence clearing row k: a_ij += tau_i * a_j,k+1 - tau_j * a_i,k+1
                Elt t = F.sub(F.mul(tau[i], a(j, k + 1)), F.mul(tau[j], a(i, k + 1)));
                a(i, j) = F.add(a(i, j), t);
            }
        }
    }
    return result;
}

}  // namespace

gf::Elt pfaffian(const Mat& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("pfaffian of non-square matrix");
    if (A.rows() % 2 != 0) throw std::invalid_argument("pfaffian requires even dimension");
    if (!A.is_alternating()) throw std::invalid_argument("pfaffian requires an alternating matrix");
    if (A.rows() == 0) return 1;
    if (A.rows() <= 8) {
        std::vector<unsigned> idx(A.rows());
        for (unsigned i = 0; i < A.rows(); ++i) idx[i] = i;
        return pfaffian_recursive(A.field(), A, idx);
    }
    return pfaffian_eliminate(A.field(), A);
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<unsigned> rref_in_place(const gf::Field& F, std::vector<Elt>& a, unsigned rows, unsigned cols) {
    std::vector<unsigned> pivots;
    unsigned rank = 0;
    for (unsigned col = 0; col < cols && rank < rows; ++col) {
        unsigned piv = rank;
        while (piv < rows && a[std::size_t(piv) * cols + col] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (unsigned c = 0; c < cols; ++c)
                std::swap(a[std::size_t(piv) * cols + c], a[std::size_t(rank) * cols + c]);
        Elt inv = F.inv(a[std::size_t(rank) * cols + col]);
        for (unsigned c = col; c < cols; ++c)
            a[std::size_t(rank) * cols + c] = F.mul(inv, a[std::size_t(rank) * cols + c]);
        for (unsigned r = 0; r < rows; ++r) {
            if (r == rank) continue;
            Elt f = a[std::size_t(r) * cols + col];
            if (!f) continue;
            Elt m = F.neg(f);
            for (unsigned c = col; c < cols; ++c)
                a[std::size_t(r) * cols + c] =
                    F.add(a[std::size_t(r) * cols + c], F.mul(m, a[std::size_t(rank) * cols + c]));
        }
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

}  // namespace

Subspace Subspace::zero(gf::Field F, unsigned ambient) {
    Subspace s;
    s.F_ = std::move(F);
    s.ambient_ = ambient;
    return s;
}

Subspace Subspace::from_flat(const gf::Field& F, unsigned ambient, std::span<const Elt> data,
                             unsigned nrows) {
    if (data.size() != std::size_t(ambient) * nrows) throw std::invalid_argument("bad basis shape");
    std::vector<Elt> a(data.begin(), data.end());
    auto pivots = rref_in_place(F, a, nrows, ambient);
    Subspace s;
    s.F_ = F;
    s.ambient_ = ambient;
    s.dim_ = static_cast<unsigned>(pivots.size());
    s.rows_.assign(a.begin(), a.begin() + std::size_t(s.dim_) * ambient);
    return s;
}

Subspace Subspace::from_vectors(const gf::Field& F, unsigned ambient,
                                const std::vector<std::vector<Elt>>& vectors) {
    std::vector<Elt> flat;
    flat.reserve(vectors.size() * ambient);
    for (const auto& v : vectors) {
        if (v.size() != ambient) throw std::invalid_argument("ambient dimension mismatch");
        flat.insert(flat.end(), v.begin(), v.end());
    }
    return from_flat(F, ambient, flat, static_cast<unsigned>(vectors.size()));
}

bool Subspace::contains(std::span<const Elt> v) const {
    if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    std::vector<Elt> w(v.begin(), v.end());
    for (unsigned i = 0; i < dim_; ++i) {
        auto row = basis_row(i);
        unsigned pc = 0;
        while (pc < ambient_ && row[pc] == 0) ++pc;
        if (pc == ambient_) continue;
        Elt f = w[pc];
        if (!f) continue;
        Elt m = F_.neg(f);  // pivot normalized to 1
        for (unsigned c = pc; c < ambient_; ++c) w[c] = F_.add(w[c], F_.mul(m, row[c]));
    }
    return std::all_of(w.begin(), w.end(), [](Elt e) { return e == 0; });
}

Subspace row_space(const Mat& A) {
    return Subspace::from_flat(A.field(), A.cols(), A.flat(), A.rows());
}

Subspace right_nullspace(const Mat& A) {
    const gf::Field& F = A.field();
    const unsigned rows = A.rows(), cols = A.cols();
    std::vector<Elt> a(A.flat().begin(), A.flat().end());
    auto pivots = rref_in_place(F, a, rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (unsigned c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Elt>> basis;
    for (unsigned free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Elt> v(cols, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = F.neg(a[i * cols + free]);
        basis.push_back(std::move(v));
    }
    return Subspace::from_vectors(F, cols, basis);
}

Subspace left_nullspace(const Mat& A) { return right_nullspace(A.transposed()); }

Subspace sum(const Subspace& U, const Subspace& W) {
    if (U.ambient() != W.ambient()) throw std::invalid_argument("ambient dimension mismatch");
    std::vector<Elt> flat(U.rows_flat().begin(), U.rows_flat().end());
    flat.insert(flat.end(), W.rows_flat().begin(), W.rows_flat().end());
    return Subspace::from_flat(U.field(), U.ambient(), flat, U.dim() + W.dim());
}

Subspace intersect(const Subspace& U, const Subspace& W) {
    if (U.ambient() != W.ambient()) throw std::invalid_argument("ambient dimension mismatch");
    const gf::Field& F = U.field();
    const unsigned amb = U.ambient();
    // Zassenhaus: rref of [u|u] over U, [w|0] over W; rows with zero left
    // half have right halves spanning the intersection
    const unsigned rows = U.dim() + W.dim();
    std::vector<Elt> a(std::size_t(rows) * 2 * amb, 0);
    for (unsigned i = 0; i < U.dim(); ++i) {
        auto r = U.basis_row(i);
        for (unsigned c = 0; c < amb; ++c) {
            a[std::size_t(i) * 2 * amb + c] = r[c];
            a[std::size_t(i) * 2 * amb + amb + c] = r[c];
        }
    }
    for (unsigned i = 0; i < W.dim(); ++i) {
        auto r = W.basis_row(i);
        for (unsigned c = 0; c < amb; ++c) a[std::size_t(U.dim() + i) * 2 * amb + c] = r[c];
    }
    rref_in_place(F, a, rows, 2 * amb);
    std::vector<std::vector<Elt>> basis;
    for (unsigned i = 0; i < rows; ++i) {
        bool left_zero = true;
        for (unsigned c = 0; c < amb && left_zero; ++c)
            if (a[std::size_t(i) * 2 * amb + c]) left_zero = false;
        if (!left_zero) continue;
        std::vector<Elt> v(amb);
        bool nonzero = false;
        for (unsigned c = 0; c < amb; ++c) {
            v[c] = a[std::size_t(i) * 2 * amb + amb + c];
            nonzero |= v[c] != 0;
        }
        if (nonzero) basis.push_back(std::move(v));
    }
    return Subspace::from_vectors(F, amb, basis);
}

namespace {

void enumerate_rref(const gf::Field& F, unsigned ambient, unsigned dim,
                    std::vector<unsigned>& pivots, unsigned next_col,
                    std::vector<Subspace>& out) {
    if (pivots.size() == dim) {
        // free cells: (i, c) with c > pivots[i], c not a pivot
        std::vector<bool> is_pivot(ambient, false);
        for (unsigned c : pivots) is_pivot[c] = true;
        std::vector<std::pair<unsigned, unsigned>> free_cells;
        for (unsigned i = 0; i < dim; ++i)
            for (unsigned c = pivots[i] + 1; c < ambient; ++c)
                if (!is_pivot[c]) free_cells.emplace_back(i, c);
        std::vector<Elt> vals(free_cells.size(), 0);
        const std::uint64_t q = F.order();
        while (true) {
            std::vector<Elt> rows(std::size_t(dim) * ambient, 0);
            for (unsigned i = 0; i < dim; ++i) rows[std::size_t(i) * ambient + pivots[i]] = 1;
            for (std::size_t t = 0; t < free_cells.size(); ++t)
                rows[std::size_t(free_cells[t].first) * ambient + free_cells[t].second] = vals[t];
            out.push_back(Subspace::from_flat(F, ambient, rows, dim));
            // odometer
            std::size_t t = 0;
            while (t < vals.size() && vals[t] + 1 == q) vals[t++] = 0;
            if (t == vals.size()) break;
            ++vals[t];
        }
        return;
    }
    if (next_col >= ambient) return;
    unsigned remaining = dim - static_cast<unsigned>(pivots.size());
    for (unsigned c = next_col; c + remaining <= ambient; ++c) {
        pivots.push_back(c);
        enumerate_rref(F, ambient, dim, pivots, c + 1, out);
        pivots.pop_back();
    }
}

}  // namespace

std::vector<Subspace> all_subspaces(const gf::Field& F, unsigned ambient, unsigned dim) {
    std::vector<Subspace> out;
    if (dim > ambient) return out;
    if (dim == 0) {
        out.push_back(Subspace::zero(F, ambient));
        return out;
    }
    std::vector<unsigned> pivots;
    enumerate_rref(F, ambient, dim, pivots, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t gaussian_binomial(std::uint64_t q, unsigned n, unsigned k) {
    if (k > n) return 0;
    // recurrence [n k] = [n-1 k-1] + q^k [n-1 k], avoids intermediate overflow
    std::vector<std::uint64_t> row(k + 1, 0);
    row[0] = 1;
    for (unsigned nn = 1; nn <= n; ++nn) {
        for (unsigned kk = std::min(nn, k); kk >= 1; --kk) {
            std::uint64_t qk = 1;
            for (unsigned i = 0; i < kk; ++i) qk *= q;
            row[kk] = (kk <= nn - 1 ? qk * row[kk] : 0) + row[kk - 1];
        }
    }
    return row[k];
}

}  // namespace formrank::linalg
