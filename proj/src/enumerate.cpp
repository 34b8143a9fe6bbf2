#include "formrank/enumerate.hpp"

#include <algorithm>
#include <random>

#include "formrank/detail/scan.hpp"

namespace formrank::enumerate {

using formspace::FormKind;
using formspace::Side;

std::string to_string(EnumMode mode) {
    switch (mode) {
        case EnumMode::full: return "full";
        case EnumMode::projective: return "projective";
        case EnumMode::sampled: return "sampled";
    }
    return "full";
}

std::vector<unsigned> RankProfile::nonzero_ranks() const {
    std::vector<unsigned> out;
    for (unsigned k = 1; k < rank_counts.size(); ++k)
        if (rank_counts[k]) out.push_back(k);
    return out;
}

std::uint64_t space_size(const FormSpace& M) {
    return detail::pow_sat(M.field().order(), M.dim());
}

std::uint64_t projective_size(const FormSpace& M) {
    std::uint64_t qd = space_size(M);
    if (qd == UINT64_MAX) return UINT64_MAX;
    return (qd - 1) / (M.field().order() - 1);
}

namespace {

std::uint64_t qpow(std::uint64_t q, unsigned e) { return detail::pow_sat(q, e); }

struct ProfileState {
    std::vector<std::uint64_t> counts;
    std::uint64_t visited = 0;
    detail::RankScratch scratch;
};

bool is_symmetric_space(const FormSpace& M) {
    return M.kind() == FormKind::symmetric ||
           (M.kind() == FormKind::alternating && M.field().characteristic() == 2);
}

RankProfile sampled_distribution(const FormSpace& M, const EnumOptions& opts) {
    const gf::Field& F = M.field();
    const unsigned d = M.dim(), n = M.n();
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, F.order() - 1);
    RankProfile prof;
    prof.mode = EnumMode::sampled;
    prof.rank_counts.assign(n + 1, 0);
    gf::FieldOps ops = F.ops();
    detail::RankScratch scratch;
    std::vector<Elt> coeffs(d);
    for (std::uint64_t i = 0; i < opts.sample_size; ++i) {
        for (unsigned j = 0; j < d; ++j) coeffs[j] = static_cast<Elt>(dist(rng));
        auto mat = M.element(coeffs);
        prof.rank_counts[detail::rank_flat(ops, mat.flat(), n, scratch)]++;
        ++prof.visited;
    }
    return prof;
}

}  // namespace

RankProfile rank_distribution(const FormSpace& M, const EnumOptions& opts) {
    const gf::Field& F = M.field();
    const unsigned n = M.n();
    const std::uint64_t q = F.order();

    auto plan = detail::make_scan_plan(q, M.dim(), opts.projective);
    if (plan.total > opts.budget) {
        if (!opts.allow_sampling)
            throw BudgetExceeded("rank enumeration of " + std::to_string(plan.total) +
                                 " elements exceeds budget " + std::to_string(opts.budget));
        return sampled_distribution(M, opts);
    }

    gf::FieldOps ops = F.ops();
    auto visit = [ops, n](ProfileState& st, std::span<const Elt>, std::span<const Elt> mat) {
        if (st.counts.empty()) st.counts.assign(n + 1, 0);
        st.counts[detail::rank_flat(ops, mat, n, st.scratch)]++;
        ++st.visited;
    };
    auto merge = [n](ProfileState& acc, ProfileState&& blk) {
        if (acc.counts.empty()) acc.counts.assign(n + 1, 0);
        for (unsigned k = 0; k <= n && k < blk.counts.size(); ++k) acc.counts[k] += blk.counts[k];
        acc.visited += blk.visited;
    };
    ProfileState st = detail::scan_formspace<ProfileState>(M, plan, opts.threads, visit, merge);
    if (st.counts.empty()) st.counts.assign(n + 1, 0);

    RankProfile prof;
    prof.visited = st.visited;
    prof.rank_counts.assign(n + 1, 0);
    if (opts.projective) {
        prof.mode = EnumMode::projective;
        prof.rank_counts[0] = 1;  // representatives are nonzero; the zero form stands alone
        for (unsigned k = 1; k <= n; ++k) prof.rank_counts[k] = st.counts[k] * (q - 1);
    } else {
        prof.mode = EnumMode::full;
        prof.rank_counts = st.counts;
    }
    return prof;
}

void compute_kernel_histograms(const FormSpace& M, RankProfile& prof, const EnumOptions& opts) {
    if (prof.has_kernel_histograms) return;
    const gf::Field& F = M.field();
    const unsigned n = M.n(), d = M.dim();
    const std::uint64_t q = F.order();
    std::uint64_t reps = (qpow(q, n) - 1) / (q - 1);
    if (2 * reps > opts.budget)
        throw BudgetExceeded("kernel histogram pass exceeds budget");

    gf::FieldOps ops = F.ops();
    detail::RankScratch scratch;
    std::vector<Elt> u(n, 0), rows(std::size_t(d) * n);
    // projective representatives of V: pivot position + free digits
    for (unsigned pivot = 0; pivot < n; ++pivot) {
        std::fill(u.begin(), u.end(), 0);
        u[pivot] = 1;
        while (true) {
            for (int side = 0; side < 2; ++side) {
                for (unsigned i = 0; i < d; ++i) {
                    const auto& A = M.basis()[i];
                    for (unsigned j = 0; j < n; ++j) {
                        Elt acc = 0;
                        for (unsigned k = 0; k < n; ++k)
                            acc = ops.add(acc, ops.mul(u[k], side == 0 ? A(k, j) : A(j, k)));
                        rows[std::size_t(i) * n + j] = acc;
                    }
                }
                unsigned rk = linalg::rank_destructive(ops, rows.data(), d, n);
                auto& hist = side == 0 ? prof.d_hist : prof.e_hist;
                hist[d - rk] += q - 1;
            }
            // odometer over digits after the pivot
            unsigned t = pivot + 1;
            while (t < n && u[t] + 1 == q) u[t++] = 0;
            if (t >= n) break;
            ++u[t];
        }
    }
    prof.has_kernel_histograms = true;
}

std::uint64_t z_count(const FormSpace& M, RankProfile& prof, const EnumOptions& opts) {
    compute_kernel_histograms(M, prof, opts);
    const std::uint64_t q = M.field().order();
    const unsigned n = M.n(), d = M.dim();
    // |Z| = sum_u q^(n-d+d(u)), d(0) = d
    std::uint64_t z = qpow(q, n);
    for (auto [dim, cnt] : prof.d_hist) z += cnt * qpow(q, n - d + dim);
    prof.z = z;
    return z;
}

std::uint64_t z_count_direct(const FormSpace& M, const EnumOptions& opts) {
    const gf::Field& F = M.field();
    const unsigned n = M.n(), d = M.dim();
    const std::uint64_t q = F.order();
    std::uint64_t qn = qpow(q, n);
    if (qn == UINT64_MAX || qn > opts.budget / qn)
        throw BudgetExceeded("direct Z scan exceeds budget");

    gf::FieldOps ops = F.ops();
    std::vector<Elt> u(n), v(n), rows(std::size_t(d) * n);
    std::uint64_t count = 0;
    for (std::uint64_t ui = 0; ui < qn; ++ui) {
        std::uint64_t t = ui;
        for (unsigned j = 0; j < n; ++j) {
            u[j] = static_cast<Elt>(t % q);
            t /= q;
        }
        for (unsigned i = 0; i < d; ++i) {
            const auto& A = M.basis()[i];
            for (unsigned j = 0; j < n; ++j) {
                Elt acc = 0;
                for (unsigned k = 0; k < n; ++k) acc = ops.add(acc, ops.mul(u[k], A(k, j)));
                rows[std::size_t(i) * n + j] = acc;
            }
        }
        for (std::uint64_t vi = 0; vi < qn; ++vi) {
            std::uint64_t s = vi;
            for (unsigned j = 0; j < n; ++j) {
                v[j] = static_cast<Elt>(s % q);
                s /= q;
            }
            bool zero = true;
            for (unsigned i = 0; i < d && zero; ++i) {
                Elt acc = 0;
                const Elt* row = rows.data() + std::size_t(i) * n;
                for (unsigned j = 0; j < n; ++j) acc = ops.add(acc, ops.mul(row[j], v[j]));
                zero = acc == 0;
            }
            if (zero) ++count;
        }
    }
    return count;
}

std::uint64_t n_count_direct(const FormSpace& M, Elt lambda, Elt mu, const EnumOptions& opts) {
    const gf::Field& F = M.field();
    if (!is_symmetric_space(M))
        throw std::invalid_argument("N(M) requires a symmetric space");
    if (!gf::is_irreducible_quadratic(F, lambda, mu))
        throw std::invalid_argument("x^2 + lambda x + mu is reducible over GF(q)");
    const unsigned n = M.n(), d = M.dim();
    const std::uint64_t q = F.order();
    std::uint64_t qn = qpow(q, n);
    if (qn == UINT64_MAX || qn > opts.budget / qn)
        throw BudgetExceeded("direct N scan exceeds budget");

    gf::FieldOps ops = F.ops();
    // quad[w][i] = f_i(w, w) for every w in V
    std::vector<Elt> quad(qn * d);
    std::vector<Elt> w(n);
    for (std::uint64_t wi = 0; wi < qn; ++wi) {
        std::uint64_t t = wi;
        for (unsigned j = 0; j < n; ++j) {
            w[j] = static_cast<Elt>(t % q);
            t /= q;
        }
        for (unsigned i = 0; i < d; ++i)
            quad[wi * d + i] = formspace::evaluate(M.basis()[i], w, w);
    }
    std::vector<Elt> u(n), v(n), rows(std::size_t(d) * n);
    std::uint64_t count = 0;
    for (std::uint64_t ui = 0; ui < qn; ++ui) {
        std::uint64_t t = ui;
        for (unsigned j = 0; j < n; ++j) {
            u[j] = static_cast<Elt>(t % q);
            t /= q;
        }
        for (unsigned i = 0; i < d; ++i) {
            const auto& A = M.basis()[i];
            for (unsigned j = 0; j < n; ++j) {
                Elt acc = 0;
                for (unsigned k = 0; k < n; ++k) acc = ops.add(acc, ops.mul(u[k], A(k, j)));
                rows[std::size_t(i) * n + j] = acc;
            }
        }
        for (std::uint64_t vi = 0; vi < qn; ++vi) {
            std::uint64_t s = vi;
            for (unsigned j = 0; j < n; ++j) {
                v[j] = static_cast<Elt>(s % q);
                s /= q;
            }
            bool zero = true;
            for (unsigned i = 0; i < d && zero; ++i) {
                Elt cross = 0;
                const Elt* row = rows.data() + std::size_t(i) * n;
                for (unsigned j = 0; j < n; ++j) cross = ops.add(cross, ops.mul(row[j], v[j]));
                Elt val = ops.add(quad[ui * d + i],
                                  ops.add(ops.mul(lambda, cross), ops.mul(mu, quad[vi * d + i])));
                zero = val == 0;
            }
            if (zero) ++count;
        }
    }
    return count;
}

namespace {

void require_exact(const RankProfile& prof) {
    if (prof.mode == EnumMode::sampled)
        throw std::invalid_argument("sampled profiles cannot feed equality assertions");
}

}  // namespace

CommonZerosReport verify_common_zeros(const FormSpace& M, const EnumOptions& opts) {
    RankProfile prof = rank_distribution(M, opts);
    require_exact(prof);
    compute_kernel_histograms(M, prof, opts);
    const std::uint64_t q = M.field().order();
    const unsigned n = M.n(), d = M.dim();

    CommonZerosReport rep;
    rep.sum_rank = 0;
    for (unsigned k = 0; k <= n; ++k) rep.sum_rank += prof.rank_counts[k] * qpow(q, n - k);
    rep.sum_d = qpow(q, d);
    for (auto [dim, cnt] : prof.d_hist) rep.sum_d += cnt * qpow(q, dim);
    rep.sum_e = qpow(q, d);
    for (auto [dim, cnt] : prof.e_hist) rep.sum_e += cnt * qpow(q, dim);

    std::uint64_t qn = qpow(q, n);
    if (qn != UINT64_MAX && qn <= (1u << 10) && qn * qn <= opts.budget) {
        rep.z_value = z_count_direct(M, opts);
        rep.z_direct = true;
    } else {
        rep.z_value = z_count(M, prof, opts);
        rep.z_direct = false;
    }
    // q^(d-n) |Z| == sum_d, cross-multiplied to stay integral for d < n
    unsigned __int128 lhs = static_cast<unsigned __int128>(qpow(q, d)) * rep.z_value;
    unsigned __int128 rhs = static_cast<unsigned __int128>(qn) * rep.sum_d;
    rep.pass = lhs == rhs && rep.sum_d == rep.sum_e && rep.sum_d == rep.sum_rank;
    return rep;
}

HermitianReport verify_hermitian_count(const FormSpace& M, std::optional<std::pair<Elt, Elt>> pair,
                                       const EnumOptions& opts) {
    const gf::Field& F = M.field();
    auto [lambda, mu] = pair ? *pair : gf::default_hermitian_pair(F);
    RankProfile prof = rank_distribution(M, opts);
    require_exact(prof);
    const std::uint64_t q = F.order();
    const unsigned n = M.n(), d = M.dim();

    HermitianReport rep;
    rep.lambda = lambda;
    rep.mu = mu;
    rep.n_direct = n_count_direct(M, lambda, mu, opts);
    std::int64_t sum = 0;
    for (unsigned k = 0; k <= n; ++k) {
        std::int64_t term = static_cast<std::int64_t>(prof.rank_counts[k] * qpow(q, n - k));
        sum += (k % 2 == 0) ? term : -term;
    }
    rep.signed_sum = sum;
    __int128 lhs = static_cast<__int128>(qpow(q, d)) * rep.n_direct;
    __int128 rhs = static_cast<__int128>(qpow(q, n)) * sum;
    rep.pass = lhs == rhs;
    return rep;
}

PfaffianDivReport pfaffian_divisibility(const FormSpace& M, const EnumOptions& opts) {
    if (M.kind() != FormKind::alternating)
        throw std::invalid_argument("pfaffian divisibility requires an alternating space");
    const unsigned n = M.n(), d = M.dim();
    if (n % 2 != 0 || n <= 2) throw std::invalid_argument("requires even n > 2");
    const unsigned m = n / 2;
    if (d <= m) throw std::invalid_argument("requires d > m (d = sm + t with s >= 1, 0 < t <= m)");

    PfaffianDivReport rep;
    rep.s = (d - 1) / m;
    rep.t = d - rep.s * m;
    RankProfile prof = rank_distribution(M, opts);
    require_exact(prof);
    rep.a_n = prof.rank_count(n);
    rep.divisor = qpow(M.field().order(), rep.s);
    rep.pass = rep.a_n % rep.divisor == 0;
    return rep;
}

namespace {

std::string fmt_rel(const std::string& lhs, const std::string& rel, std::uint64_t a, std::uint64_t b) {
    return lhs + " = " + std::to_string(a) + " " + rel + " " + std::to_string(b);
}

// all nonzero u have d(u) == x: histogram over nonzero u must be {x: q^n - 1}
bool hist_constant(const std::map<unsigned, std::uint64_t>& hist, unsigned x) {
    return hist.size() == 1 && hist.begin()->first == x;
}

unsigned hist_max(const std::map<unsigned, std::uint64_t>& hist) {
    return hist.empty() ? 0 : hist.rbegin()->first;
}

}  // namespace

BoundsReport verify_bounds(const FormSpace& M, const EnumOptions& opts) {
    RankProfile prof = rank_distribution(M, opts);
    return verify_bounds(M, prof, opts);
}

BoundsReport verify_bounds(const FormSpace& M, RankProfile& prof, const EnumOptions& opts) {
    require_exact(prof);
    const gf::Field& F = M.field();
    const std::uint64_t q = F.order();
    const unsigned n = M.n(), d = M.dim();
    const bool symmetric_space = is_symmetric_space(M);
    const bool alternating = M.kind() == FormKind::alternating;

    BoundsReport rep;
    rep.nonzero_ranks = prof.nonzero_ranks();
    const auto& R = rep.nonzero_ranks;
    auto add = [&](std::string name, bool pass, std::string statement) {
        rep.checks.push_back({std::move(name), std::move(statement), pass});
        rep.all_pass = rep.all_pass && rep.checks.back().pass;
    };

    if (R.empty()) return rep;
    const unsigned min_rank = R.front(), max_rank = R.back();

    if (R.size() == 1) {
        unsigned r = R[0];
        add("constant_rank_generic_bound", d <= 2 * n - r,
            fmt_rel("dim", "<=", d, 2 * n - r) + " (constant rank " + std::to_string(r) + ")");
        if (q >= r + 1)
            add("constant_rank_bound_large_q", d <= n,
                fmt_rel("dim", "<=", d, n) + " (q >= r+1)");
    }

    if (R.size() == 2 && max_rank == n) {
        unsigned r = min_rank;
        add("two_rank_bound", d <= 3 * n - r, fmt_rel("dim", "<=", d, 3 * n - r));
        if (q >= r + 1) {
            add("two_rank_bound_large_q", d <= 2 * n, fmt_rel("dim", "<=", d, 2 * n));
            if (d == 2 * n) {
                bool div_ok = n % (n - r) == 0;
                std::uint64_t num = (qpow(q, n) - 1) * (qpow(q, n) - 1);
                std::uint64_t den = qpow(q, n - r) - 1;
                bool count_ok = num % den == 0 && prof.rank_count(r) == num / den;
                add("two_rank_dim_2n_divisibility", div_ok,
                    "n-r = " + std::to_string(n - r) + " divides n = " + std::to_string(n));
                add("two_rank_dim_2n_count", count_ok,
                    fmt_rel("A_r", "==", prof.rank_count(r), num / den));
            }
        }
    }

    if (alternating && n > 2 && n % 2 == 0 && min_rank >= n - 2) {
        unsigned m = n / 2;
        add("alternating_rank_ge_n_minus_2_bound", d <= 3 * m, fmt_rel("dim", "<=", d, 3 * m));
    }

    if (symmetric_space && R.size() == 2) {
        unsigned r = R[0], l = R[1];
        if ((r + l) % 2 == 1) {
            if (q > 2)
                add("symmetric_two_rank_bound", d <= 2 * n - r, fmt_rel("dim", "<=", d, 2 * n - r));
            if (l == n && n % 2 == 0 && r % 2 == 1)
                add("symmetric_two_rank_bound_q2", d <= 2 * n - r,
                    fmt_rel("dim", "<=", d, 2 * n - r) + " (valid for every q)");
            if (l == n && d == 2 * n - r) {
                // extremal two-rank symmetric space: exact counts (case a)
                // or inequalities (case b)
                std::uint64_t qn = qpow(q, n);
                compute_kernel_histograms(M, prof, opts);
                std::uint64_t zv = z_count(M, prof, opts);
                std::uint64_t nv = 0;
                bool have_n = false;
                if (qn != UINT64_MAX && qn <= opts.budget / qn) {
                    auto [lam, mu] = gf::default_hermitian_pair(F);
                    nv = n_count_direct(M, lam, mu, opts);
                    prof.n_pairs = nv;
                    prof.hermitian = {lam, mu};
                    have_n = true;
                }
                if (r % 2 == 1 && n % 2 == 0) {
                    add("extremal_counts_a_rank_r", prof.rank_count(r) == qn - 1,
                        fmt_rel("A_r", "==", prof.rank_count(r), qn - 1));
                    add("extremal_counts_a_rank_n",
                        prof.rank_count(n) == qpow(q, 2 * n - r) - qn,
                        fmt_rel("A_n", "==", prof.rank_count(n), qpow(q, 2 * n - r) - qn));
                    add("extremal_counts_a_z", zv == 2 * qn - 1, fmt_rel("|Z|", "==", zv, 2 * qn - 1));
                    if (have_n) add("extremal_counts_a_n", nv == 1, fmt_rel("|N|", "==", nv, 1));
                    add("extremal_counts_a_kernel", hist_constant(prof.d_hist, n - r),
                        "dim M_u == " + std::to_string(n - r) + " for all nonzero u");
                    if (F.characteristic() == 2) {
                        unsigned alt_dim = formspace::alternating_part_coeffs(M).dim();
                        add("extremal_counts_a_alt_part", alt_dim == n - r,
                            fmt_rel("dim M_Alt", "==", alt_dim, n - r));
                    }
                } else if (r % 2 == 0 && n % 2 == 1 && have_n) {
                    std::uint64_t qr = qpow(q, r);
                    add("extremal_counts_b_n_lower", nv >= 2 * qr - 1,
                        fmt_rel("|N|", ">=", nv, 2 * qr - 1));
                    bool eq_n = nv == 2 * qr - 1;
                    bool eq_z = zv == 2 * qn - 1;
                    bool eq_a = prof.rank_count(r) == qn - 1;
                    add("extremal_counts_b_equivalences", eq_n == eq_z && eq_z == eq_a,
                        std::string("equality pattern (|N|,|Z|,A_r): ") + (eq_n ? "1" : "0") +
                            (eq_z ? "1" : "0") + (eq_a ? "1" : "0"));
                }
            }
        }
    }

    if (symmetric_space && R.size() == 3 && max_rank == n && q > 2) {
        unsigned r = R[0], l = R[1];
        if ((r + l) % 2 == 1) {
            add("symmetric_three_rank_bound", d <= 3 * n - r - 2,
                fmt_rel("dim", "<=", d, 3 * n - r - 2));
            compute_kernel_histograms(M, prof, opts);
            add("symmetric_three_rank_kernel_bound", hist_max(prof.d_hist) <= 2 * n - 2 - r,
                fmt_rel("max dim M_u", "<=", hist_max(prof.d_hist), 2 * n - 2 - r));
        }
    }

    if (symmetric_space && n >= 3 && min_rank >= n - 2 && !(n % 2 == 0 && q == 2)) {
        add("rank_ge_n_minus_2_bound", d <= 2 * n, fmt_rel("dim", "<=", d, 2 * n));
        if (d == 2 * n) {
            compute_kernel_histograms(M, prof, opts);
            add("rank_ge_n_minus_2_kernel", hist_constant(prof.d_hist, n),
                "dim M_u == " + std::to_string(n) + " for all nonzero u");
        }
    }

    if (symmetric_space && n == 4 && q % 2 == 1 && min_rank >= 2 && max_rank <= 4 &&
        !std::count(R.begin(), R.end(), 3u) && !std::count(R.begin(), R.end(), 1u)) {
        add("four_dimensional_two_rank_bound", d <= 6, fmt_rel("dim", "<=", d, 6));
        if (d == 6) {
            add("four_dimensional_rank2_count", prof.rank_count(2) == qpow(q, 4) - 1,
                fmt_rel("A_2", "==", prof.rank_count(2), qpow(q, 4) - 1));
            compute_kernel_histograms(M, prof, opts);
            add("four_dimensional_kernel", hist_constant(prof.d_hist, 2),
                "dim M_u == 2 for all nonzero u");
        }
    }

    if (symmetric_space && n == 6 && R == std::vector<unsigned>{3, 6} && q >= 4)
        add("six_dimensional_two_rank_bound", d <= 9, fmt_rel("dim", "<=", d, 9));

    return rep;
}

}  // namespace formrank::enumerate
