#include "formrank/verify.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "formrank/analyze.hpp"
#include "formrank/construct.hpp"
#include "formrank/io.hpp"

namespace formrank::verify {

using formspace::FormKind;
using formspace::FormSpace;
using formspace::Side;
using gf::Elt;
using gf::Field;
using linalg::Mat;

namespace {

struct Ctx {
    enumerate::EnumOptions eopts;
    analyze::AnalyzeOptions aopts;
};

std::uint64_t qpow(std::uint64_t q, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= q;
    return r;
}

std::string join_counts(const std::vector<std::uint64_t>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

Mat random_matrix(const Field& F, unsigned rows, unsigned cols, std::mt19937_64& rng) {
    Mat m(F, rows, cols);
    std::uniform_int_distribution<std::uint64_t> dist(0, F.order() - 1);
    for (unsigned i = 0; i < rows; ++i)
        for (unsigned j = 0; j < cols; ++j) m(i, j) = static_cast<Elt>(dist(rng));
    return m;
}

Mat random_invertible(const Field& F, unsigned n, std::mt19937_64& rng) {
    while (true) {
        Mat m = random_matrix(F, n, n, rng);
        if (linalg::rank(m) == n) return m;
    }
}

Mat random_alternating(const Field& F, unsigned n, std::mt19937_64& rng) {
    Mat m(F, n, n);
    std::uniform_int_distribution<std::uint64_t> dist(0, F.order() - 1);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) {
            Elt v = static_cast<Elt>(dist(rng));
            m(i, j) = v;
            m(j, i) = F.neg(v);
        }
    return m;
}

FormSpace random_formspace(const Field& F, unsigned n, unsigned d, FormKind kind,
                           std::mt19937_64& rng) {
    while (true) {
        std::vector<Mat> basis;
        for (unsigned i = 0; i < d; ++i) {
            Mat m = random_matrix(F, n, n, rng);
            if (kind == FormKind::symmetric) {
                for (unsigned r = 0; r < n; ++r)
                    for (unsigned c = r + 1; c < n; ++c) m(c, r) = m(r, c);
            }
            basis.push_back(std::move(m));
        }
        try {
            return FormSpace(F, n, kind, std::move(basis));
        } catch (const std::invalid_argument&) {
            // dependent sample, redraw
        }
    }
}

// ---- individual checks ------------------------------------------------

CheckResult check_two_rank_dimension_2n(const Ctx& ctx) {
    auto M = construct::linearized_two_rank(3, 1, 2);
    enumerate::EnumOptions full = ctx.eopts;
    full.projective = false;
    auto prof = enumerate::rank_distribution(M, full);
    auto bounds = enumerate::verify_bounds(M, prof, ctx.eopts);
    bool pass = M.dim() == 4 && prof.rank_count(1) == 32 && bounds.all_pass;
    return {"two_rank_dimension_2n", 1, pass,
            "d=" + std::to_string(M.dim()) + " A=" + join_counts(prof.rank_counts)};
}

CheckResult check_common_zeros_random(const Ctx& ctx) {
    Field F = Field::make(3, 1);
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    unsigned failures = 0;
    for (unsigned trial = 0; trial < 100; ++trial) {
        unsigned d = 1 + trial % 5;
        auto M = random_formspace(F, 3, d, FormKind::bilinear, rng);
        if (!enumerate::verify_common_zeros(M, ctx.eopts).pass) ++failures;
    }
    return {"common_zeros_random_bil_f27", 2, failures == 0,
            "100 random subspaces of Bil(F_3^3), failures=" + std::to_string(failures)};
}

std::vector<std::pair<std::string, FormSpace>> family_list() {
    std::vector<std::pair<std::string, FormSpace>> out;
    out.emplace_back("linearized(2,1,2)", construct::linearized_two_rank(2, 1, 2));
    out.emplace_back("linearized(3,1,2)", construct::linearized_two_rank(3, 1, 2));
    out.emplace_back("linearized(2,2,2)", construct::linearized_two_rank(2, 2, 2));
    out.emplace_back("linearized(2,1,3)", construct::linearized_two_rank(2, 1, 3));
    out.emplace_back("symmetric(3,1,4)", construct::symmetric_two_rank(3, 1, 4));
    out.emplace_back("symmetric(2,3,2)", construct::symmetric_two_rank(2, 3, 2));
    out.emplace_back("symmetric(3,2,2)", construct::symmetric_two_rank(3, 2, 2));
    out.emplace_back("symmetric(4,3,2)", construct::symmetric_two_rank(4, 3, 2));
    out.emplace_back("cyclic_symmetric(2,5)", construct::cyclic_symmetric(2, 5));
    out.emplace_back("cyclic_symmetric(2,3)", construct::cyclic_symmetric(2, 3));
    out.emplace_back("cyclic_symmetric(3,4)", construct::cyclic_symmetric(3, 4));
    out.emplace_back("cyclic_alternating(2,3)", construct::cyclic_alternating(2, 3));
    out.emplace_back("cyclic_alternating(3,2)", construct::cyclic_alternating(3, 2));
    out.emplace_back("cyclic_alternating(2,2)", construct::cyclic_alternating(2, 2));
    out.emplace_back("trace_hyperplane(3,4)", construct::trace_hyperplane(3, 4));
    out.emplace_back("trace_hyperplane(2,2)", construct::trace_hyperplane(2, 2));
    out.emplace_back("trace_hyperplane(2,5)", construct::trace_hyperplane(2, 5));
    out.emplace_back("trace_hyperplane(4,3)", construct::trace_hyperplane(4, 3));
    out.emplace_back("trace_hyperplane(5,4)", construct::trace_hyperplane(5, 4));
    out.emplace_back("trace_hyperplane(7,4)", construct::trace_hyperplane(7, 4));
    out.emplace_back("trace_forms(2,5)", construct::trace_forms(2, 5));
    return out;
}

CheckResult check_common_zeros_families(const Ctx& ctx) {
    std::string failed;
    for (const auto& [name, M] : family_list()) {
        if (enumerate::space_size(M) > (1ull << 20)) continue;
        if (!enumerate::verify_common_zeros(M, ctx.eopts).pass) failed += name + " ";
    }
    return {"common_zeros_families", 2, failed.empty(),
            failed.empty() ? "all families with q^d <= 2^20 pass" : "failed: " + failed};
}

CheckResult check_bounds_families(const Ctx& ctx) {
    std::string failed;
    for (const auto& [name, M] : family_list()) {
        if (enumerate::space_size(M) > (1ull << 20)) continue;
        auto rep = enumerate::verify_bounds(M, ctx.eopts);
        if (!rep.all_pass) failed += name + " ";
    }
    return {"paper_bounds_families", 11, failed.empty(),
            failed.empty() ? "every applicable dimension bound holds" : "failed: " + failed};
}

CheckResult check_hermitian_identity(const Ctx& ctx) {
    std::vector<std::pair<std::string, FormSpace>> cases;
    cases.emplace_back("Symm(F_2^2)", formspace::full_space(Field::make(2, 1), 2, FormKind::symmetric));
    cases.emplace_back("Symm(F_3^2)", formspace::full_space(Field::make(3, 1), 2, FormKind::symmetric));
    cases.emplace_back("cyclic_symmetric(2,5)", construct::cyclic_symmetric(2, 5));
    cases.emplace_back("trace_hyperplane(3,4)", construct::trace_hyperplane(3, 4));
    std::string failed;
    std::string details;
    for (const auto& [name, M] : cases) {
        auto rep = enumerate::verify_hermitian_count(M, std::nullopt, ctx.eopts);
        if (!rep.pass) failed += name + " ";
        details += name + ":|N|=" + std::to_string(rep.n_direct) + " ";
    }
    return {"hermitian_identity", 3, failed.empty(), details};
}

CheckResult check_equality_case_a(const Ctx& ctx) {
    auto M = construct::trace_hyperplane(3, 4);
    auto prof = enumerate::rank_distribution(M, ctx.eopts);
    std::uint64_t z = enumerate::z_count_direct(M, ctx.eopts);
    auto [lam, mu] = gf::default_hermitian_pair(M.field());
    std::uint64_t nn = enumerate::n_count_direct(M, lam, mu, ctx.eopts);
    bool pass = prof.rank_count(3) == 80 && prof.rank_count(4) == 162 && z == 161 && nn == 1;
    return {"equality_case_a_counts", 4, pass,
            "A3=" + std::to_string(prof.rank_count(3)) + " A4=" + std::to_string(prof.rank_count(4)) +
                " |Z|=" + std::to_string(z) + " |N|=" + std::to_string(nn)};
}

CheckResult check_structure_2n(const Ctx& ctx) {
    auto M = construct::cyclic_symmetric(2, 5);
    auto prof = enumerate::rank_distribution(M, ctx.eopts);
    auto rep = analyze::radical_bijection(M, ctx.aopts);
    bool counts = prof.rank_count(3) == 155 && prof.rank_count(4) == 496 && prof.rank_count(5) == 372;
    bool pass = counts && rep.pass && rep.lines == 155 && rep.pairs_checked == 465 &&
                rep.pair_intersections_ok;
    return {"structure_2n_correspondence", 5, pass,
            "A3=" + std::to_string(prof.rank_count(3)) + " A4=" + std::to_string(prof.rank_count(4)) +
                " A5=" + std::to_string(prof.rank_count(5)) + " lines=" + std::to_string(rep.lines) +
                " pairs=" + std::to_string(rep.pairs_checked)};
}

CheckResult check_alternating_optimum(const Ctx& ctx) {
    auto M = construct::cyclic_alternating(2, 3);
    auto prof = enumerate::rank_distribution(M, ctx.eopts);
    auto ranks = prof.nonzero_ranks();
    auto div = enumerate::pfaffian_divisibility(M, ctx.eopts);
    bool pass = M.dim() == 9 && ranks == std::vector<unsigned>{4, 6} && div.s == 2 && div.pass;
    return {"alternating_optimum", 6, pass,
            "d=" + std::to_string(M.dim()) + " A6=" + std::to_string(div.a_n) + " q^s=" +
                std::to_string(div.divisor)};
}

CheckResult check_pfaffian(const Ctx&) {
    unsigned failures = 0;
    // exhaustive alternating 4x4 over GF(2) and GF(3)
    for (unsigned p : {2u, 3u}) {
        Field F = Field::make(p, 1);
        const unsigned pairs = 6;  // above-diagonal entries of a 4x4
        std::uint64_t total = qpow(p, pairs);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            Mat A(F, 4, 4);
            std::uint64_t t = idx;
            for (unsigned i = 0; i < 4; ++i)
                for (unsigned j = i + 1; j < 4; ++j) {
                    Elt v = static_cast<Elt>(t % p);
                    t /= p;
                    A(i, j) = v;
                    A(j, i) = F.neg(v);
                }
            Elt pf = linalg::pfaffian(A);
            if (F.mul(pf, pf) != linalg::det(A)) ++failures;
        }
    }
    // random 6x6 and 8x8 over GF(2) and GF(4)
    std::mt19937_64 rng(0xabcdef1234567890ull);
    for (std::uint64_t q : {2u, 4u}) {
        Field F = Field::make_order(q);
        for (unsigned n : {6u, 8u}) {
            for (unsigned trial = 0; trial < 10000; ++trial) {
                Mat A = random_alternating(F, n, rng);
                Elt pf = linalg::pfaffian(A);
                if (F.mul(pf, pf) != linalg::det(A)) ++failures;
            }
        }
    }
    return {"pfaffian_correctness", 7, failures == 0,
            "failures=" + std::to_string(failures) + " over exhaustive 4x4 and 4x10^4 random"};
}

CheckResult check_spread_q4(const Ctx& ctx) {
    auto M = construct::symmetric_two_rank(4, 3, 2);
    auto rep = analyze::radical_spread(M, 3, ctx.aopts);
    bool pass = rep.radicals.size() == 65 && rep.is_spread &&
                (!rep.common_radical_checked || rep.common_radical);
    return {"spread_geometry_q4", 8, pass,
            "radicals=" + std::to_string(rep.radicals.size()) + " spread=" +
                (rep.is_spread ? "true" : "false") + " regime=" + rep.regime};
}

CheckResult check_spread_q5(const Ctx& ctx) {
    auto M = construct::symmetric_two_rank(5, 3, 2);
    auto rep = analyze::radical_spread(M, 3, ctx.aopts);
    auto pts = analyze::pick_decomposition_points(M, ctx.aopts);
    auto dec = analyze::mu_decomposition(M, pts[0], pts[1], pts[2], ctx.aopts);
    bool pass = rep.radicals.size() == 126 && rep.is_spread && rep.regime == "theorem" &&
                (!rep.common_radical_checked || rep.common_radical) && dec.pass;
    return {"spread_geometry_q5", 8, pass,
            "radicals=" + std::to_string(rep.radicals.size()) + " spread=" +
                (rep.is_spread ? "true" : "false") + " decomposition=" +
                (dec.pass ? "pass" : "fail")};
}

CheckResult check_const_rank_trace7(const Ctx& ctx) {
    auto M = construct::trace_hyperplane(7, 4);
    auto rep = analyze::constant_rank_search(M, 3, 3, ctx.aopts);
    bool pass = rep.max_dim_found == 1 && rep.exhaustive && rep.certificate_verified &&
                rep.bounds_pass;
    return {"constant_rank_trace7", 9, pass,
            "max=" + std::to_string(rep.max_dim_found) + " exhaustive=" +
                (rep.exhaustive ? "true" : "false")};
}

CheckResult check_const_rank_trace5(const Ctx& ctx) {
    auto M = construct::trace_hyperplane(5, 4);
    auto rep = analyze::constant_rank_search(M, 3, 3, ctx.aopts);
    bool pass = rep.max_dim_found == 1 && rep.exhaustive && rep.bounds_pass;
    return {"constant_rank_trace5", 9, pass,
            "max=" + std::to_string(rep.max_dim_found) + " exhaustive=" +
                (rep.exhaustive ? "true" : "false")};
}

CheckResult check_const_rank_cyclic45(const Ctx& ctx) {
    auto M = construct::cyclic_symmetric(4, 5);
    auto rep = analyze::constant_rank_search(M, 3, 3, ctx.aopts);
    auto alt = formspace::alternating_part(M);
    auto aprof = enumerate::rank_distribution(alt, ctx.eopts);
    bool alt_ok = alt.dim() == 5 && aprof.nonzero_ranks() == std::vector<unsigned>{4};
    bool pass = rep.max_dim_found <= 2 && rep.exhaustive && rep.bounds_pass && alt_ok;
    return {"constant_rank_cyclic45", 9, pass,
            "max=" + std::to_string(rep.max_dim_found) + " dim_alt=" + std::to_string(alt.dim()) +
                " alt_ranks_const4=" + (alt_ok ? "true" : "false")};
}

CheckResult check_inverse_subspace(unsigned p, unsigned k, unsigned deg, std::uint64_t a_expect,
                                   unsigned criterion, const std::string& name) {
    auto rep = analyze::inverse_subspace_check(p, k, deg);
    bool pass = rep.pass && rep.a_count == a_expect && rep.u_count == a_expect;
    return {name, criterion, pass,
            "A=" + std::to_string(rep.a_count) + " U=" + std::to_string(rep.u_count) +
                " violations=" + std::to_string(rep.violating_pairs)};
}

CheckResult check_field_axioms(const Ctx&) {
    unsigned failures = 0;
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u}) {
        Field F = Field::make_order(q);
        for (Elt a = 0; a < q; ++a) {
            if (a && F.mul(a, F.inv(a)) != 1) ++failures;
            if (F.add(a, F.neg(a)) != 0) ++failures;
            for (Elt b = 0; b < q; ++b) {
                if (F.add(a, b) != F.add(b, a)) ++failures;
                if (F.mul(a, b) != F.mul(b, a)) ++failures;
                for (Elt c = 0; c < q; ++c) {
                    if (F.add(F.add(a, b), c) != F.add(a, F.add(b, c))) ++failures;
                    if (F.mul(F.mul(a, b), c) != F.mul(a, F.mul(b, c))) ++failures;
                    if (F.mul(a, F.add(b, c)) != F.add(F.mul(a, b), F.mul(a, c))) ++failures;
                }
            }
        }
    }
    return {"property_field_axioms", 11, failures == 0,
            "exhaustive axioms over all fields of order <= 64, failures=" +
                std::to_string(failures)};
}

CheckResult check_rank_invariance(const Ctx&) {
    std::mt19937_64 rng(0x1357924680acebdfull);
    unsigned failures = 0;
    for (std::uint64_t q : {2u, 3u, 4u}) {
        Field F = Field::make_order(q);
        for (unsigned trial = 0; trial < 200; ++trial) {
            unsigned n = 5 + trial % 2;
            Mat A = random_matrix(F, n, n, rng);
            if (linalg::rank(A) != linalg::rank(A.transposed())) ++failures;
            Mat P = random_invertible(F, n, rng), Q = random_invertible(F, n, rng);
            // PAQ
            Mat PA(F, n, n), PAQ(F, n, n);
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j) {
                    Elt acc = 0;
                    for (unsigned k = 0; k < n; ++k) acc = F.add(acc, F.mul(P(i, k), A(k, j)));
                    PA(i, j) = acc;
                }
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j) {
                    Elt acc = 0;
                    for (unsigned k = 0; k < n; ++k) acc = F.add(acc, F.mul(PA(i, k), Q(k, j)));
                    PAQ(i, j) = acc;
                }
            if (linalg::rank(PAQ) != linalg::rank(A)) ++failures;
        }
    }
    return {"property_rank_invariance", 11, failures == 0,
            "rank(A)=rank(A^T), rank(PAQ)=rank(A); failures=" + std::to_string(failures)};
}

CheckResult check_projective_full(const Ctx& ctx) {
    std::string failed;
    std::mt19937_64 rng(0x2468ace13579bdfull);
    std::vector<std::pair<std::string, FormSpace>> cases;
    cases.emplace_back("Bil(F_2^2)", formspace::full_space(Field::make(2, 1), 2, FormKind::bilinear));
    cases.emplace_back("Symm(F_3^2)", formspace::full_space(Field::make(3, 1), 2, FormKind::symmetric));
    cases.emplace_back("linearized(2,2,2)", construct::linearized_two_rank(2, 2, 2));
    cases.emplace_back("trace_hyperplane(3,4)", construct::trace_hyperplane(3, 4));
    cases.emplace_back("cyclic_symmetric(2,5)", construct::cyclic_symmetric(2, 5));
    for (unsigned i = 0; i < 5; ++i)
        cases.emplace_back("random_symm_f27_" + std::to_string(i),
                           random_formspace(Field::make(3, 1), 3, 3, FormKind::symmetric, rng));
    for (const auto& [name, M] : cases) {
        if (enumerate::space_size(M) > (1ull << 16)) continue;
        enumerate::EnumOptions proj = ctx.eopts, full = ctx.eopts;
        proj.projective = true;
        full.projective = false;
        auto a = enumerate::rank_distribution(M, proj);
        auto b = enumerate::rank_distribution(M, full);
        if (a.rank_counts != b.rank_counts) failed += name + " ";
    }
    return {"property_projective_full_agreement", 11, failed.empty(),
            failed.empty() ? "projective and full enumerations agree" : "failed: " + failed};
}

CheckResult check_z_bound(const Ctx& ctx) {
    std::string failed;
    for (const auto& [name, M] : family_list()) {
        if (enumerate::space_size(M) > (1ull << 18)) continue;
        enumerate::RankProfile prof = enumerate::rank_distribution(M, ctx.eopts);
        std::uint64_t z = enumerate::z_count(M, prof, ctx.eopts);
        std::uint64_t qn = qpow(M.field().order(), M.n());
        bool lower = z >= 2 * qn - 1;
        // equality iff d(u) = e(u) = d - n for every nonzero u
        bool all_trivial = M.dim() >= M.n() && prof.d_hist.size() == 1 &&
                           prof.e_hist.size() == 1 &&
                           prof.d_hist.begin()->first == M.dim() - M.n() &&
                           prof.e_hist.begin()->first == M.dim() - M.n();
        bool iff = (z == 2 * qn - 1) == all_trivial;
        if (!lower || !iff) failed += name + " ";
    }
    return {"property_z_lower_bound", 11, failed.empty(),
            failed.empty() ? "|Z| >= 2q^n - 1 with the trivial-element equality characterization"
                           : "failed: " + failed};
}

CheckResult check_kernel_sides(const Ctx&) {
    std::string failed;
    for (const auto& [name, M] : family_list()) {
        if (M.kind() == FormKind::bilinear) continue;
        if (qpow(M.field().order(), M.n()) > (1u << 12)) continue;
        const Field& F = M.field();
        bool ok = true;
        std::vector<Elt> u(M.n(), 0);
        // all projective points
        const std::uint64_t q = F.order();
        for (unsigned pivot = 0; pivot < M.n() && ok; ++pivot) {
            std::fill(u.begin(), u.end(), 0);
            u[pivot] = 1;
            while (ok) {
                unsigned du = formspace::sub_at_vector_coeffs(M, u, Side::left).dim();
                unsigned eu = formspace::sub_at_vector_coeffs(M, u, Side::right).dim();
                if (du != eu) ok = false;
                unsigned t = pivot + 1;
                while (t < M.n() && u[t] + 1 == q) u[t++] = 0;
                if (t >= M.n()) break;
                ++u[t];
            }
        }
        if (!ok) failed += name + " ";
    }
    return {"property_kernel_sides_equal", 11, failed.empty(),
            failed.empty() ? "d(u) = e(u) for symmetric/alternating spaces" : "failed: " + failed};
}

struct CheckDef {
    std::string name;
    unsigned criterion;
    bool in_smoke;
    std::function<CheckResult(const Ctx&)> fn;
};

const std::vector<CheckDef>& all_checks() {
    static const std::vector<CheckDef> defs = {
        {"two_rank_dimension_2n", 1, true, check_two_rank_dimension_2n},
        {"common_zeros_random_bil_f27", 2, false, check_common_zeros_random},
        {"common_zeros_families", 2, false, check_common_zeros_families},
        {"hermitian_identity", 3, true, check_hermitian_identity},
        {"equality_case_a_counts", 4, true, check_equality_case_a},
        {"structure_2n_correspondence", 5, false, check_structure_2n},
        {"alternating_optimum", 6, true, check_alternating_optimum},
        {"pfaffian_correctness", 7, false, check_pfaffian},
        {"spread_geometry_q4", 8, false, check_spread_q4},
        {"spread_geometry_q5", 8, false, check_spread_q5},
        {"constant_rank_trace7", 9, false, check_const_rank_trace7},
        {"constant_rank_trace5", 9, false, check_const_rank_trace5},
        {"constant_rank_cyclic45", 9, false, check_const_rank_cyclic45},
        {"inverse_subspace_gf4_gf64", 10, true,
         [](const Ctx&) { return check_inverse_subspace(2, 2, 3, 21, 10, "inverse_subspace_gf4_gf64"); }},
        {"inverse_subspace_gf5_gf125", 10, false,
         [](const Ctx&) { return check_inverse_subspace(5, 1, 3, 31, 10, "inverse_subspace_gf5_gf125"); }},
        {"property_field_axioms", 11, true, check_field_axioms},
        {"property_rank_invariance", 11, false, check_rank_invariance},
        {"property_projective_full_agreement", 11, false, check_projective_full},
        {"property_z_lower_bound", 11, false, check_z_bound},
        {"property_kernel_sides_equal", 11, false, check_kernel_sides},
        {"paper_bounds_families", 11, false, check_bounds_families},
    };
    return defs;
}

}  // namespace

bool valid_suite(const std::string& name) { return name == "paper" || name == "smoke"; }

Summary run_suite(const VerifyOptions& opts) {
    if (!valid_suite(opts.suite)) throw std::invalid_argument("unknown suite: " + opts.suite);
    Ctx ctx;
    ctx.eopts.budget = opts.budget;
    ctx.eopts.threads = opts.threads;
    ctx.aopts.enum_opts = ctx.eopts;
    Summary summary;
    for (const auto& def : all_checks()) {
        if (opts.suite == "smoke" && !def.in_smoke) continue;
        CheckResult res;
        try {
            res = def.fn(ctx);
        } catch (const enumerate::BudgetExceeded& e) {
            res = {def.name, def.criterion, false, std::string("budget exceeded: ") + e.what()};
        } catch (const std::exception& e) {
            res = {def.name, def.criterion, false, std::string("error: ") + e.what()};
        }
        summary.all_pass = summary.all_pass && res.pass;
        summary.checks.push_back(std::move(res));
    }
    return summary;
}

std::string summary_text(const Summary& summary, const VerifyOptions& opts) {
    io::json j;
    j["tool"] = io::tool_info();
    j["suite"] = opts.suite;
    j["budget"] = opts.budget;
    io::json checks = io::json::array();
    for (const auto& c : summary.checks) {
        io::json cj;
        cj["name"] = c.name;
        cj["criterion"] = c.criterion;
        cj["pass"] = c.pass;
        cj["details"] = c.details;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["pass"] = summary.all_pass;
    return io::canonical_text(j);
}

}  // namespace formrank::verify
