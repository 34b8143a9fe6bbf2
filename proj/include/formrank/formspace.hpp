#pragma once

#include <map>
#include <optional>
#include <string>

#include "formrank/linalg.hpp"

namespace formrank::formspace {

using gf::Elt;

enum class FormKind { bilinear, symmetric, alternating };

std::string to_string(FormKind kind);
std::optional<FormKind> kind_from_string(const std::string& s);

/// Construction parameters carried along for reporting; not part of the
/// mathematical identity of the space.
struct Provenance {
    std::string family;
    std::map<std::string, std::uint64_t> params;
};

/// A d-dimensional subspace of Bil(V), V = GF(q)^n, spanned by d linearly
/// independent n x n matrices. The constructor validates independence and
/// that every basis matrix satisfies the declared kind.
class FormSpace {
public:
    FormSpace(gf::Field F, unsigned n, FormKind kind, std::vector<linalg::Mat> basis,
              std::optional<Provenance> prov = std::nullopt);

    const gf::Field& field() const { return F_; }
    unsigned n() const { return n_; }
    unsigned dim() const { return static_cast<unsigned>(basis_.size()); }
    FormKind kind() const { return kind_; }
    const std::vector<linalg::Mat>& basis() const { return basis_; }
    const std::optional<Provenance>& provenance() const { return prov_; }

    /// sum of coeffs[i] * basis[i]; coeffs must have length dim().
    linalg::Mat element(std::span<const Elt> coeffs) const;

    friend bool operator==(const FormSpace& a, const FormSpace& b);

private:
    gf::Field F_;
    unsigned n_ = 0;
    FormKind kind_ = FormKind::bilinear;
    std::vector<linalg::Mat> basis_;
    std::optional<Provenance> prov_;
};

/// Most specific kind all matrices satisfy (alternating beats symmetric).
FormKind classify_kind(const std::vector<linalg::Mat>& mats);

/// Bil(V), Symm(V) or Alt(V) with its standard basis.
FormSpace full_space(gf::Field F, unsigned n, FormKind kind);

/// u^T A v
Elt evaluate(const linalg::Mat& A, std::span<const Elt> u, std::span<const Elt> v);

enum class Side { left, right };

/// Coefficient subspace of the forms f in M with u in rad_L f (resp.
/// rad_R f); its dimension is d(u) (resp. e(u)). u must be nonzero.
linalg::Subspace sub_at_vector_coeffs(const FormSpace& M, std::span<const Elt> u, Side side);
FormSpace sub_at_vector(const FormSpace& M, std::span<const Elt> u, Side side);

/// Forms whose radical contains the subspace U. M must be symmetric or
/// alternating (for plain bilinear spaces the two sides differ; use
/// sub_at_vector per side). U must be nonzero and proper.
linalg::Subspace sub_at_subspace_coeffs(const FormSpace& M, const linalg::Subspace& U);
FormSpace sub_at_subspace(const FormSpace& M, const linalg::Subspace& U);

/// The subspace of alternating forms inside a symmetric space over a field
/// of characteristic 2 (linear conditions: all diagonal entries vanish).
linalg::Subspace alternating_part_coeffs(const FormSpace& M);
FormSpace alternating_part(const FormSpace& M);

/// V(M) = { w : f(w,w) = 0 for all f in M }, characteristic 2. Computed by
/// the semilinear-kernel route: w -> f(w,w) equals (sum_j sqrt(A_jj) w_j)^2,
/// so V(M) is the joint kernel of the square-root diagonal rows.
linalg::Subspace isotropic_subspace(const FormSpace& M);

/// The sub-formspace spanned by the coefficient vectors in C.
FormSpace from_coeff_subspace(const FormSpace& M, const linalg::Subspace& C);

}  // namespace formrank::formspace
