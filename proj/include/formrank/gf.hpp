#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace formrank::gf {

/// Field element, encoded as the integer sum(c_i * p^i) of its coefficient
/// vector (little-endian in the power basis of the modulus root). The zero
/// element is 0 and the multiplicative identity is 1 in every field.
using Elt = std::uint32_t;

namespace detail {
struct FieldImpl;
}

/// Raw table views for inner loops. Valid only while the owning Field lives.
/// add2/mul2/div2 are q*q row-major tables; neg1/inv1 have q entries
/// (inv1[0] is unspecified). Present for every field this library constructs
/// with q <= 4096; larger fields expose exp/log arithmetic only.
struct FieldOps {
    std::uint64_t q = 0;
    const Elt* add2 = nullptr;
    const Elt* mul2 = nullptr;
    const Elt* div2 = nullptr;
    const Elt* neg1 = nullptr;
    const Elt* inv1 = nullptr;

    Elt add(Elt a, Elt b) const { return add2[a * q + b]; }
    Elt sub(Elt a, Elt b) const { return add2[a * q + neg1[b]]; }
    Elt mul(Elt a, Elt b) const { return mul2[a * q + b]; }
    Elt div(Elt a, Elt b) const { return div2[a * q + b]; }
    Elt neg(Elt a) const { return neg1[a]; }
    Elt inv(Elt a) const { return inv1[a]; }
};

/// GF(p^k) with exact table-backed arithmetic. Cheap to copy (shared
/// immutable implementation). Two fields interoperate iff same_spec() holds,
/// i.e. they agree on (p, k, modulus).
///
/// A field may declare a subfield GF(q0) (q0 = p^j, j | k), which is pure
/// metadata enabling the relative operations frobenius / rel_trace /
/// subfield_basis. Arithmetic always runs in the absolute representation.
class Field {
public:
    Field() = default;

    /// Field with the default modulus: the lexicographically least monic
    /// irreducible of degree k over GF(p), ordered by the integer encoding
    /// of the non-leading coefficients.
    static Field make(unsigned p, unsigned k);
    static Field make(unsigned p, unsigned k, std::vector<unsigned> modulus);
    /// q must be a prime power.
    static Field make_order(std::uint64_t q);

    /// Copy of this field with the tower GF(q0) <= GF(p^k) declared.
    Field with_subfield(std::uint64_t q0) const;

    bool valid() const { return impl_ != nullptr; }
    unsigned characteristic() const;
    unsigned degree() const;
    std::uint64_t order() const;
    const std::vector<unsigned>& modulus() const;

    bool has_subfield() const;
    std::uint64_t subfield_order() const;
    /// [GF(p^k) : GF(q0)]
    unsigned relative_degree() const;

    bool same_spec(const Field& other) const;

    Elt add(Elt a, Elt b) const;
    Elt sub(Elt a, Elt b) const;
    Elt neg(Elt a) const;
    Elt mul(Elt a, Elt b) const;
    Elt inv(Elt a) const;  // throws std::domain_error on 0
    Elt div(Elt a, Elt b) const;
    Elt pow(Elt a, std::uint64_t e) const;

    /// x^(q0^e) for the declared subfield size q0. Throws without a tower.
    Elt frobenius(Elt a, unsigned e = 1) const;
    /// sum of frobenius(a, i) for 0 <= i < relative_degree(); lands in the
    /// embedded subfield. Throws without a tower.
    Elt rel_trace(Elt a) const;
    /// GF(q0)-basis of this field: powers x^0 .. x^(m-1) of the modulus root.
    std::vector<Elt> subfield_basis() const;

    /// The modulus root (coefficient vector e_1); generates the field over
    /// any subfield.
    Elt gen() const;
    /// Primitive element backing the exp/log tables.
    Elt primitive() const;

    Elt from_coeffs(std::span<const unsigned> coeffs) const;
    std::vector<unsigned> coeffs(Elt a) const;

    /// Table views for hot loops; throws if q > 4096 (no q^2 tables).
    FieldOps ops() const;

private:
    std::shared_ptr<const detail::FieldImpl> impl_;
    std::uint64_t subfield_order_ = 0;  // 0 = no tower declared
};

/// Convenience wrapper pairing an element with its field; mismatched-field
/// operands throw std::invalid_argument.
struct FieldElement {
    Field field;
    Elt v = 0;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    FieldElement inverse() const;
};

/// Embedding of a standalone field K into L (deg K | deg L, same p), via the
/// least root of K's modulus in L. Provides the K-coordinate system on L
/// with respect to the power basis {x^j : j < [L:K]} used to flatten forms.
class SubfieldMap {
public:
    SubfieldMap(Field K, Field L);

    const Field& sub() const { return K_; }
    const Field& big() const { return L_; }
    unsigned dim() const { return m_; }  // [L:K]

    Elt embed(Elt a) const;
    bool in_subfield(Elt y) const;
    Elt project(Elt y) const;  // inverse of embed; throws if y not embedded
    /// K-coordinates of y in the power basis {x^j}.
    std::vector<Elt> coords(Elt y) const;
    Elt from_coords(std::span<const Elt> u) const;

private:
    Field K_, L_;
    unsigned m_ = 0;
    std::vector<Elt> embed_;                  // indexed by K element
    std::unordered_map<Elt, Elt> project_;
    std::vector<unsigned> coord_solver_;      // GF(p) inverse matrix, kL x kL
};

/// (lambda, mu) with x^2 + lambda*x + mu irreducible over F: for odd q,
/// lambda = 0 and -mu the least non-square; for even q the least such pair
/// in (lambda, mu) element order.
std::pair<Elt, Elt> default_hermitian_pair(const Field& F);

/// true iff x^2 + lambda*x + mu has no root in F.
bool is_irreducible_quadratic(const Field& F, Elt lambda, Elt mu);

}  // namespace formrank::gf
