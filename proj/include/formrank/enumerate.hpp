#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "formrank/formspace.hpp"

namespace formrank::enumerate {

using formspace::FormSpace;
using gf::Elt;

/// Thrown when an exhaustive pass would exceed the configured element budget
/// and sampling was not allowed.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class EnumMode { full, projective, sampled };

std::string to_string(EnumMode mode);

struct EnumOptions {
    std::uint64_t budget = 1ull << 24;  // element visits per exhaustive pass
    unsigned threads = 1;
    bool projective = true;
    bool allow_sampling = false;   // degrade to sampling instead of throwing
    std::uint64_t sample_size = 1ull << 20;
    std::uint64_t seed = 0x517ecb1d2f0a44e1ull;
};

/// Exact rank distribution and kernel-dimension data for a form space.
/// rank_counts always refers to the full space (projective counts are scaled
/// by q-1), except in sampled mode where it holds raw sample tallies.
struct RankProfile {
    std::vector<std::uint64_t> rank_counts;  // A_0 .. A_n
    EnumMode mode = EnumMode::full;
    std::uint64_t visited = 0;

    /// Histograms over nonzero u only: dimension of M_u^L (resp. M_u^R)
    /// mapped to the number of nonzero u attaining it.
    std::map<unsigned, std::uint64_t> d_hist, e_hist;
    bool has_kernel_histograms = false;

    std::optional<std::uint64_t> z;        // |Z(M)|
    std::optional<std::uint64_t> n_pairs;  // |N(M)|
    std::optional<std::pair<Elt, Elt>> hermitian;  // (lambda, mu) used for N

    std::uint64_t rank_count(unsigned k) const { return k < rank_counts.size() ? rank_counts[k] : 0; }
    std::vector<unsigned> nonzero_ranks() const;
};

std::uint64_t space_size(const FormSpace& M);       // q^d, saturating
std::uint64_t projective_size(const FormSpace& M);  // (q^d - 1) / (q - 1)

RankProfile rank_distribution(const FormSpace& M, const EnumOptions& opts = {});

/// Fills d_hist / e_hist by ranking the d x n evaluation matrices of every
/// projective point of V.
void compute_kernel_histograms(const FormSpace& M, RankProfile& prof, const EnumOptions& opts = {});

/// |Z(M)| via the kernel formula sum_u q^(n-d+d(u)); attaches the value and
/// histograms to prof.
std::uint64_t z_count(const FormSpace& M, RankProfile& prof, const EnumOptions& opts = {});

/// |Z(M)| by a literal scan over all pairs (u, v), evaluating every basis
/// form; serves as the independent cross-check of the formula route.
std::uint64_t z_count_direct(const FormSpace& M, const EnumOptions& opts = {});

/// |N(M)| by direct pair enumeration; requires a symmetric space (or an
/// alternating one in characteristic 2) and an irreducible x^2+lambda*x+mu.
std::uint64_t n_count_direct(const FormSpace& M, Elt lambda, Elt mu, const EnumOptions& opts = {});

struct CommonZerosReport {
    std::uint64_t z_value = 0;
    bool z_direct = false;  // true if |Z| came from the literal pair scan
    std::uint64_t sum_d = 0, sum_e = 0, sum_rank = 0;  // the three sum routes
    bool pass = false;
};

/// Checks q^(d-n) |Z| = sum_u q^d(u) = sum_u q^e(u) = sum_k A_k q^(n-k).
CommonZerosReport verify_common_zeros(const FormSpace& M, const EnumOptions& opts = {});

struct HermitianReport {
    Elt lambda = 0, mu = 0;
    std::uint64_t n_direct = 0;
    std::int64_t signed_sum = 0;  // sum_k (-1)^k A_k q^(n-k)
    bool pass = false;
};

/// Checks q^(d-n) |N| = sum_k (-1)^k A_k q^(n-k) with a directly enumerated
/// |N|; the default (lambda, mu) follows gf::default_hermitian_pair.
HermitianReport verify_hermitian_count(const FormSpace& M,
                                       std::optional<std::pair<Elt, Elt>> pair = std::nullopt,
                                       const EnumOptions& opts = {});

struct PfaffianDivReport {
    unsigned s = 0, t = 0;
    std::uint64_t a_n = 0, divisor = 0;  // q^s must divide A_n
    bool pass = false;
};

/// Ax-Katz divisibility for alternating spaces: n = 2m > 2, d = s*m + t with
/// s >= 1 and 0 < t <= m implies q^s | A_n. Throws for d <= m.
PfaffianDivReport pfaffian_divisibility(const FormSpace& M, const EnumOptions& opts = {});

struct BoundCheck {
    std::string name;       // stable identifier of the bound
    std::string statement;  // human-readable relation with observed numbers
    bool pass = false;
};

struct BoundsReport {
    std::vector<unsigned> nonzero_ranks;
    std::vector<BoundCheck> checks;  // applicable checks only
    bool all_pass = true;
};

/// Classifies M by its nonzero rank set and asserts every applicable
/// dimension bound and count formula. Violations are reported as failed
/// checks, never thrown.
BoundsReport verify_bounds(const FormSpace& M, const EnumOptions& opts = {});
BoundsReport verify_bounds(const FormSpace& M, RankProfile& prof, const EnumOptions& opts = {});

}  // namespace formrank::enumerate
