#include "formrank/formspace.hpp"

#include <stdexcept>

namespace formrank::formspace {

std::string to_string(FormKind kind) {
    switch (kind) {
        case FormKind::bilinear: return "bilinear";
        case FormKind::symmetric: return "symmetric";
        case FormKind::alternating: return "alternating";
    }
    return "bilinear";
}

std::optional<FormKind> kind_from_string(const std::string& s) {
    if (s == "bilinear") return FormKind::bilinear;
    if (s == "symmetric") return FormKind::symmetric;
    if (s == "alternating") return FormKind::alternating;
    return std::nullopt;
}

FormSpace::FormSpace(gf::Field F, unsigned n, FormKind kind, std::vector<linalg::Mat> basis,
                     std::optional<Provenance> prov)
    : F_(std::move(F)), n_(n), kind_(kind), basis_(std::move(basis)), prov_(std::move(prov)) {
    for (const auto& m : basis_) {
        if (m.rows() != n_ || m.cols() != n_) throw std::invalid_argument("basis matrix has wrong shape");
        if (!m.field().same_spec(F_)) throw std::invalid_argument("basis matrix over wrong field");
        if (kind_ == FormKind::symmetric && !m.is_symmetric())
            throw std::invalid_argument("non-symmetric matrix in symmetric space");
        if (kind_ == FormKind::alternating && !m.is_alternating())
            throw std::invalid_argument("non-alternating matrix in alternating space");
    }
    // independence: flatten to d x n^2 and rank
    if (!basis_.empty()) {
        linalg::Mat flat(F_, dim(), n_ * n_);
        for (unsigned i = 0; i < dim(); ++i) {
            auto src = basis_[i].flat();
            for (unsigned j = 0; j < n_ * n_; ++j) flat(i, j) = src[j];
        }
        if (linalg::rank(flat) != dim())
            throw std::invalid_argument("basis matrices are linearly dependent");
    }
}

linalg::Mat FormSpace::element(std::span<const Elt> coeffs) const {
    if (coeffs.size() != dim()) throw std::invalid_argument("coefficient vector has wrong length");
    linalg::Mat out(F_, n_, n_);
    for (unsigned i = 0; i < dim(); ++i) out.add_scaled(basis_[i], coeffs[i]);
    return out;
}

bool operator==(const FormSpace& a, const FormSpace& b) {
    if (!a.F_.same_spec(b.F_) || a.n_ != b.n_ || a.kind_ != b.kind_ || a.basis_.size() != b.basis_.size())
        return false;
    for (std::size_t i = 0; i < a.basis_.size(); ++i)
        if (a.basis_[i].flat().size() != b.basis_[i].flat().size() ||
            !std::equal(a.basis_[i].flat().begin(), a.basis_[i].flat().end(), b.basis_[i].flat().begin()))
            return false;
    return true;
}

FormKind classify_kind(const std::vector<linalg::Mat>& mats) {
    bool alt = true, sym = true;
    for (const auto& m : mats) {
        alt = alt && m.is_alternating();
        sym = sym && m.is_symmetric();
    }
    if (alt) return FormKind::alternating;
    if (sym) return FormKind::symmetric;
    return FormKind::bilinear;
}

FormSpace full_space(gf::Field F, unsigned n, FormKind kind) {
    std::vector<linalg::Mat> basis;
    auto unit = [&](unsigned i, unsigned j) {
        linalg::Mat m(F, n, n);
        m(i, j) = 1;
        return m;
    };
    switch (kind) {
        case FormKind::bilinear:
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j) basis.push_back(unit(i, j));
            break;
        case FormKind::symmetric:
            for (unsigned i = 0; i < n; ++i) basis.push_back(unit(i, i));
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = i + 1; j < n; ++j) {
                    linalg::Mat m(F, n, n);
                    m(i, j) = 1;
                    m(j, i) = 1;
                    basis.push_back(m);
                }
            break;
        case FormKind::alternating:
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = i + 1; j < n; ++j) {
                    linalg::Mat m(F, n, n);
                    m(i, j) = 1;
                    m(j, i) = F.neg(1);
                    basis.push_back(m);
                }
            break;
    }
    return FormSpace(F, n, kind, std::move(basis));
}

Elt evaluate(const linalg::Mat& A, std::span<const Elt> u, std::span<const Elt> v) {
    const gf::Field& F = A.field();
    Elt acc = 0;
    for (unsigned i = 0; i < A.rows(); ++i) {
        if (!u[i]) continue;
        Elt rowdot = 0;
        for (unsigned j = 0; j < A.cols(); ++j)
            rowdot = F.add(rowdot, F.mul(A(i, j), v[j]));
        acc = F.add(acc, F.mul(u[i], rowdot));
    }
    return acc;
}

namespace {

bool all_zero(std::span<const Elt> v) {
    for (Elt e : v)
        if (e) return false;
    return true;
}

}  // namespace

linalg::Subspace sub_at_vector_coeffs(const FormSpace& M, std::span<const Elt> u, Side side) {
    if (u.size() != M.n()) throw std::invalid_argument("vector has wrong length");
    if (all_zero(u)) throw std::invalid_argument("sub_at_vector requires a nonzero vector");
    const gf::Field& F = M.field();
    const unsigned n = M.n(), d = M.dim();
    linalg::Mat R(F, d, n);
    for (unsigned i = 0; i < d; ++i) {
        const auto& A = M.basis()[i];
        for (unsigned j = 0; j < n; ++j) {
            Elt acc = 0;
            for (unsigned k = 0; k < n; ++k) {
                Elt a = side == Side::left ? A(k, j) : A(j, k);
                acc = F.add(acc, F.mul(u[k], a));
            }
            R(i, j) = acc;
        }
    }
    return linalg::left_nullspace(R);
}

FormSpace sub_at_vector(const FormSpace& M, std::span<const Elt> u, Side side) {
    return from_coeff_subspace(M, sub_at_vector_coeffs(M, u, side));
}

linalg::Subspace sub_at_subspace_coeffs(const FormSpace& M, const linalg::Subspace& U) {
    if (M.kind() == FormKind::bilinear)
        throw std::invalid_argument("sub_at_subspace requires a symmetric or alternating space");
    if (U.ambient() != M.n()) throw std::invalid_argument("ambient dimension mismatch");
    if (U.dim() == 0 || U.dim() >= M.n())
        throw std::invalid_argument("sub_at_subspace requires a nonzero proper subspace");
    const gf::Field& F = M.field();
    const unsigned n = M.n(), d = M.dim(), r = U.dim();
    linalg::Mat R(F, d, r * n);
    for (unsigned i = 0; i < d; ++i) {
        const auto& A = M.basis()[i];
        for (unsigned b = 0; b < r; ++b) {
            auto u = U.basis_row(b);
            for (unsigned j = 0; j < n; ++j) {
                Elt acc = 0;
                for (unsigned k = 0; k < n; ++k) acc = F.add(acc, F.mul(u[k], A(k, j)));
                R(i, b * n + j) = acc;
            }
        }
    }
    return linalg::left_nullspace(R);
}

FormSpace sub_at_subspace(const FormSpace& M, const linalg::Subspace& U) {
    return from_coeff_subspace(M, sub_at_subspace_coeffs(M, U));
}

linalg::Subspace alternating_part_coeffs(const FormSpace& M) {
    if (M.field().characteristic() != 2)
        throw std::invalid_argument("alternating part requires characteristic 2");
    if (M.kind() == FormKind::bilinear)
        throw std::invalid_argument("alternating part requires a symmetric space");
    const gf::Field& F = M.field();
    const unsigned n = M.n(), d = M.dim();
    linalg::Mat Dg(F, d, n);
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < n; ++j) Dg(i, j) = M.basis()[i](j, j);
    return linalg::left_nullspace(Dg);
}

FormSpace alternating_part(const FormSpace& M) {
    if (M.kind() == FormKind::alternating && M.field().characteristic() == 2) return M;
    return from_coeff_subspace(M, alternating_part_coeffs(M));
}

linalg::Subspace isotropic_subspace(const FormSpace& M) {
    if (M.field().characteristic() != 2)
        throw std::invalid_argument("isotropic subspace requires characteristic 2");
    if (M.kind() == FormKind::bilinear)
        throw std::invalid_argument("isotropic subspace requires a symmetric space");
    const gf::Field& F = M.field();
    const unsigned n = M.n(), d = M.dim();
    const std::uint64_t half = F.order() / 2;  // sqrt(a) = a^(q/2) in char 2
    linalg::Mat B(F, d, n);
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < n; ++j) B(i, j) = F.pow(M.basis()[i](j, j), half);
    return linalg::right_nullspace(B);
}

FormSpace from_coeff_subspace(const FormSpace& M, const linalg::Subspace& C) {
    if (C.ambient() != M.dim()) throw std::invalid_argument("coefficient space dimension mismatch");
    std::vector<linalg::Mat> basis;
    basis.reserve(C.dim());
    for (unsigned i = 0; i < C.dim(); ++i) basis.push_back(M.element(C.basis_row(i)));
    return FormSpace(M.field(), M.n(), classify_kind(basis), std::move(basis));
}

}  // namespace formrank::formspace
