#pragma once

#include <array>

#include "formrank/enumerate.hpp"

namespace formrank::analyze {

using formspace::FormSpace;
using gf::Elt;

struct AnalyzeOptions {
    enumerate::EnumOptions enum_opts;
    /// Budget for backtracking-search combination checks (distinct from the
    /// enumeration element budget).
    std::uint64_t search_budget = 1ull << 26;
};

/// Radical geometry of the minimum-rank elements of a two-rank space.
struct SpreadReport {
    unsigned target_rank = 0;
    std::vector<linalg::Subspace> radicals;  // distinct, in canonical order
    std::uint64_t expected_count = 0;        // q^r + 1
    bool pairwise_trivial = false;
    bool covers = false;  // sum (q^r - 1) + 1 == q^n, given trivial intersections
    bool is_spread = false;
    bool common_radical_checked = false;
    bool common_radical = false;  // nonzero elements of each M_u share one radical
    std::string regime;           // "theorem", "char2-extension" or "observation"
};

SpreadReport radical_spread(const FormSpace& M, unsigned r, const AnalyzeOptions& opts = {});

struct DecompositionReport {
    unsigned r = 0;
    unsigned dim_u = 0, dim_w = 0, dim_z = 0;
    bool pair_direct = false;         // M_u + M_w is direct of dimension 2r
    bool triple_intersection_zero = false;  // (M_u + M_w) fully meets M_z in 0
    bool spans = false;               // M_u + M_w + M_z == M
    bool no_extra_min_rank = false;   // rank-r elements of M_u + M_w lie in M_u or M_w
    bool pass = false;
};

/// Verifies M = M_u + M_w + M_z is a direct decomposition for three vectors
/// with pairwise distinct M_u. Throws if the subspaces are not pairwise
/// distinct.
DecompositionReport mu_decomposition(const FormSpace& M, std::span<const Elt> u,
                                     std::span<const Elt> w, std::span<const Elt> z,
                                     const AnalyzeOptions& opts = {});

/// First three projective points of V with pairwise distinct M_u, in
/// canonical order.
std::array<std::vector<Elt>, 3> pick_decomposition_points(const FormSpace& M,
                                                          const AnalyzeOptions& opts = {});

struct BijectionReport {
    unsigned radical_dim = 0;       // dimension of the radicals in the correspondence
    std::uint64_t lines = 0;        // projective points of the target rank in M
    std::uint64_t distinct_radicals = 0;
    std::uint64_t expected = 0;     // number of radical_dim-subspaces of V
    bool injective = false, surjective = false, bijective = false;
    bool counts_pass = true;        // the A_k formulas tied to the shape
    std::uint64_t pairs_checked = 0;
    bool pair_intersections_ok = true;  // dim(M_u ∩ M_v) == 1 with matching radical
    std::vector<std::string> notes;
    bool pass = false;
};

/// For symmetric M of dimension 2n with all nonzero ranks >= n-2: the map
/// from rank-(n-2) lines to their 2-dimensional radicals. Full bijection is
/// asserted for odd n; for even n only surjectivity and the count
/// inequalities are asserted and bijectivity is recorded.
BijectionReport radical_bijection(const FormSpace& M, const AnalyzeOptions& opts = {});

/// Line <-> projective point correspondence for rank n-1:
/// either alternating constant-rank-(n-1) M with n odd and dim M = n, or
/// symmetric M with n even, dim M = n+1 and all nonzero ranks >= n-1.
BijectionReport rank_n_minus_1_correspondence(const FormSpace& M, const AnalyzeOptions& opts = {});

struct ConstRankReport {
    unsigned target_rank = 0;
    unsigned max_dim_searched = 0;
    unsigned max_dim_found = 0;
    std::vector<std::vector<Elt>> certificate;  // coefficient vectors in M
    bool exhaustive = false;
    bool certificate_verified = false;
    std::uint64_t combos_checked = 0;
    std::vector<enumerate::BoundCheck> bound_checks;
    bool bounds_pass = true;
};

/// Backtracking search for the largest subspace of M all of whose nonzero
/// elements have rank exactly r, capped at max_dim. Certificates are
/// re-verified by an exhaustive scan of their span, and every applicable
/// contained-constant-rank bound is asserted when the search was exhaustive.
ConstRankReport constant_rank_search(const FormSpace& M, unsigned r, unsigned max_dim,
                                     const AnalyzeOptions& opts = {});

struct IsotropicReport {
    std::uint64_t count = 0;     // nonzero common isotropic points of N
    std::uint64_t expected = 0;  // q^(n - dim N) - 1
    bool asserted = false;       // gate: constant odd rank and q >= n
    bool pass = true;
};

IsotropicReport isotropic_point_count(const FormSpace& N, const AnalyzeOptions& opts = {});

struct InverseSubspaceReport {
    bool precondition_ok = false;
    std::string note;
    std::uint64_t a_count = 0, u_count = 0;
    std::uint64_t violating_pairs = 0;
    bool pass = false;
};

/// Exhaustive check that no 2-dimensional K-subspace U of L = GF(p^(k_sub *
/// rel_deg)) has all its nonzero elements inverting into a fixed
/// (rel_deg-1)-dimensional K-subspace, K = GF(p^k_sub). Preconditions
/// (rel_deg > 2 with no intermediate fields, |K| >= rel_deg - 1) are
/// reported, not thrown.
InverseSubspaceReport inverse_subspace_check(unsigned p, unsigned k_sub, unsigned rel_deg);

}  // namespace formrank::analyze
