#pragma once

#include "formrank/formspace.hpp"

namespace formrank::construct {

using formspace::FormSpace;

/// 2n-dimensional subspace of Bil(V), V = GF(q)^n with n = m*s, whose
/// nonzero elements have rank r = n - m or n. Built from the linearized maps
/// x -> a x + b x^Q over GF(Q^s), Q = q^m, composed with the trace down to
/// GF(q). Requires s >= 2 (so that 0 < r < n).
FormSpace linearized_two_rank(std::uint64_t q, unsigned m, unsigned s);

/// (2n-r)-dimensional symmetric subspace with nonzero ranks in {r, n},
/// n = m*s, r = n - m: the forms Tr(z x y) on L = GF(q^(m(s+1))) restricted
/// to the trace-zero GF(q^m)-hyperplane W and flattened over GF(q).
/// Requires s >= 2 (n >= 2 and r >= 1).
FormSpace symmetric_two_rank(std::uint64_t q, unsigned m, unsigned s);

/// 2n-dimensional symmetric subspace of Symm(GF(q)^n) with every nonzero
/// rank >= n - 2: the forms Tr(lambda x y + mu x sigma(y) + mu sigma(x) y)
/// on GF(q^n). Requires n >= 3.
FormSpace cyclic_symmetric(std::uint64_t q, unsigned n);

/// 3m-dimensional alternating subspace of Alt(GF(q)^n), n = 2m, with nonzero
/// ranks in {n-2, n}: Tr(lambda sigma^m(x) y + mu x sigma^(m-1)(y)
/// - mu sigma^(m-1)(x) y) with lambda restricted to {x : sigma^m(x) = -x}.
/// Requires m >= 2.
FormSpace cyclic_alternating(std::uint64_t q, unsigned m);

/// (n+1)-dimensional symmetric subspace with nonzero ranks >= n - 1: the
/// forms Tr(z x y) on GF(q^(n+1)) restricted to the trace-zero hyperplane.
/// Requires n >= 2.
FormSpace trace_hyperplane(std::uint64_t q, unsigned n);

/// The n-dimensional space of nondegenerate forms Tr(z x y) on GF(q^n)
/// itself (no restriction); every nonzero element has rank n.
FormSpace trace_forms(std::uint64_t q, unsigned n);

/// Dispatch by CLI family name; throws std::invalid_argument for unknown
/// names or invalid parameters.
FormSpace by_family(const std::string& family,
                    const std::map<std::string, std::uint64_t>& params);

}  // namespace formrank::construct
