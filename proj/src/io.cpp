#include "formrank/io.hpp"

#include <fstream>

namespace formrank::io {

json field_to_json(const gf::Field& F) {
    json j;
    j["p"] = F.characteristic();
    j["k"] = F.degree();
    j["modulus"] = F.modulus();
    if (F.has_subfield()) j["q0"] = F.subfield_order();
    return j;
}

gf::Field field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("k") || !j.contains("modulus"))
        throw std::invalid_argument("field object requires p, k and modulus");
    unsigned p = j.at("p").get<unsigned>();
    unsigned k = j.at("k").get<unsigned>();
    auto modulus = j.at("modulus").get<std::vector<unsigned>>();
    gf::Field F = gf::Field::make(p, k, std::move(modulus));
    if (j.contains("q0")) F = F.with_subfield(j.at("q0").get<std::uint64_t>());
    return F;
}

namespace {

json matrix_to_json(const gf::Field& F, const linalg::Mat& A) {
    json rows = json::array();
    for (unsigned i = 0; i < A.rows(); ++i) {
        json row = json::array();
        for (unsigned j = 0; j < A.cols(); ++j) row.push_back(F.coeffs(A(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

linalg::Mat matrix_from_json(const gf::Field& F, unsigned n, const json& j) {
    if (!j.is_array() || j.size() != n) throw std::invalid_argument("matrix must have n rows");
    linalg::Mat A(F, n, n);
    for (unsigned i = 0; i < n; ++i) {
        const json& row = j.at(i);
        if (!row.is_array() || row.size() != n) throw std::invalid_argument("matrix row has wrong length");
        for (unsigned c = 0; c < n; ++c) {
            auto coeffs = row.at(c).get<std::vector<unsigned>>();
            A(i, c) = F.from_coeffs(coeffs);
        }
    }
    return A;
}

}  // namespace

json formspace_to_json(const formspace::FormSpace& M) {
    json j;
    j["field"] = field_to_json(M.field());
    j["n"] = M.n();
    j["kind"] = formspace::to_string(M.kind());
    json basis = json::array();
    for (const auto& A : M.basis()) basis.push_back(matrix_to_json(M.field(), A));
    j["basis"] = std::move(basis);
    if (M.provenance()) {
        json fam;
        fam["name"] = M.provenance()->family;
        fam["params"] = M.provenance()->params;
        j["family"] = std::move(fam);
    }
    return j;
}

formspace::FormSpace formspace_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("form-space document must be an object");
    for (const char* key : {"field", "n", "kind", "basis"})
        if (!j.contains(key)) throw std::invalid_argument(std::string("missing key: ") + key);
    gf::Field F = field_from_json(j.at("field"));
    unsigned n = j.at("n").get<unsigned>();
    auto kind = formspace::kind_from_string(j.at("kind").get<std::string>());
    if (!kind) throw std::invalid_argument("unknown kind: " + j.at("kind").get<std::string>());
    const json& basis_j = j.at("basis");
    if (!basis_j.is_array()) throw std::invalid_argument("basis must be an array");
    std::vector<linalg::Mat> basis;
    basis.reserve(basis_j.size());
    for (const auto& mj : basis_j) basis.push_back(matrix_from_json(F, n, mj));
    std::optional<formspace::Provenance> prov;
    if (j.contains("family")) {
        formspace::Provenance p;
        p.family = j.at("family").at("name").get<std::string>();
        if (j.at("family").contains("params"))
            p.params = j.at("family").at("params").get<std::map<std::string, std::uint64_t>>();
        prov = std::move(p);
    }
    return formspace::FormSpace(std::move(F), n, *kind, std::move(basis), std::move(prov));
}

std::string canonical_text(const json& j) { return j.dump(2) + "\n"; }

std::string write_formspace(const formspace::FormSpace& M) {
    return canonical_text(formspace_to_json(M));
}

formspace::FormSpace read_formspace_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j = json::parse(in);  // throws json::parse_error on corrupt input
    return formspace_from_json(j);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << text;
}

json tool_info() {
    json j;
    j["name"] = kToolName;
    j["version"] = kToolVersion;
    return j;
}

json input_summary(const formspace::FormSpace& M) {
    json j;
    j["field"] = field_to_json(M.field());
    j["n"] = M.n();
    j["kind"] = formspace::to_string(M.kind());
    j["dim"] = M.dim();
    if (M.provenance()) {
        j["family"] = M.provenance()->family;
        j["params"] = M.provenance()->params;
    }
    return j;
}

json profile_to_json(const formspace::FormSpace& M, const enumerate::RankProfile& prof) {
    json j;
    j["tool"] = tool_info();
    j["input"] = input_summary(M);
    j["mode"] = enumerate::to_string(prof.mode);
    j["visited"] = prof.visited;
    j["rank_counts"] = prof.rank_counts;
    if (prof.has_kernel_histograms) {
        json dh = json::object(), eh = json::object();
        for (auto [dim, cnt] : prof.d_hist) dh[std::to_string(dim)] = cnt;
        for (auto [dim, cnt] : prof.e_hist) eh[std::to_string(dim)] = cnt;
        j["d_histogram"] = std::move(dh);
        j["e_histogram"] = std::move(eh);
    }
    if (prof.z) j["z_count"] = *prof.z;
    if (prof.n_pairs) j["n_count"] = *prof.n_pairs;
    if (prof.hermitian) {
        j["hermitian_lambda"] = prof.hermitian->first;
        j["hermitian_mu"] = prof.hermitian->second;
    }
    return j;
}

json common_zeros_to_json(const enumerate::CommonZerosReport& rep) {
    json j;
    j["z"] = rep.z_value;
    j["z_direct_scan"] = rep.z_direct;
    j["sum_q_pow_d_u"] = rep.sum_d;
    j["sum_q_pow_e_u"] = rep.sum_e;
    j["sum_rank_terms"] = rep.sum_rank;
    j["pass"] = rep.pass;
    return j;
}

json hermitian_to_json(const enumerate::HermitianReport& rep) {
    json j;
    j["lambda"] = rep.lambda;
    j["mu"] = rep.mu;
    j["n_direct"] = rep.n_direct;
    j["signed_sum"] = rep.signed_sum;
    j["pass"] = rep.pass;
    return j;
}

json pfaffian_div_to_json(const enumerate::PfaffianDivReport& rep) {
    json j;
    j["s"] = rep.s;
    j["t"] = rep.t;
    j["rank_n_count"] = rep.a_n;
    j["divisor"] = rep.divisor;
    j["pass"] = rep.pass;
    return j;
}

json bounds_to_json(const enumerate::BoundsReport& rep) {
    json j;
    j["nonzero_ranks"] = rep.nonzero_ranks;
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json cj;
        cj["name"] = c.name;
        cj["statement"] = c.statement;
        cj["pass"] = c.pass;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["pass"] = rep.all_pass;
    return j;
}

json subspace_to_json(const linalg::Subspace& S) {
    const gf::Field& F = S.field();
    json rows = json::array();
    for (unsigned i = 0; i < S.dim(); ++i) {
        json row = json::array();
        for (gf::Elt e : S.basis_row(i)) row.push_back(F.coeffs(e));
        rows.push_back(std::move(row));
    }
    json j;
    j["ambient"] = S.ambient();
    j["dim"] = S.dim();
    j["basis"] = std::move(rows);
    return j;
}

json spread_to_json(const analyze::SpreadReport& rep) {
    json j;
    j["target_rank"] = rep.target_rank;
    j["distinct_radicals"] = rep.radicals.size();
    j["expected_count"] = rep.expected_count;
    j["pairwise_trivial"] = rep.pairwise_trivial;
    j["covers"] = rep.covers;
    j["is_spread"] = rep.is_spread;
    j["common_radical_checked"] = rep.common_radical_checked;
    j["common_radical"] = rep.common_radical;
    j["regime"] = rep.regime;
    return j;
}

json decomposition_to_json(const analyze::DecompositionReport& rep) {
    json j;
    j["r"] = rep.r;
    j["dims"] = {rep.dim_u, rep.dim_w, rep.dim_z};
    j["pair_direct"] = rep.pair_direct;
    j["triple_intersection_zero"] = rep.triple_intersection_zero;
    j["spans"] = rep.spans;
    j["no_extra_min_rank"] = rep.no_extra_min_rank;
    j["pass"] = rep.pass;
    return j;
}

json bijection_to_json(const analyze::BijectionReport& rep) {
    json j;
    j["radical_dim"] = rep.radical_dim;
    j["lines"] = rep.lines;
    j["distinct_radicals"] = rep.distinct_radicals;
    j["expected"] = rep.expected;
    j["injective"] = rep.injective;
    j["surjective"] = rep.surjective;
    j["bijective"] = rep.bijective;
    j["counts_pass"] = rep.counts_pass;
    j["pairs_checked"] = rep.pairs_checked;
    j["pair_intersections_ok"] = rep.pair_intersections_ok;
    j["notes"] = rep.notes;
    j["pass"] = rep.pass;
    return j;
}

json const_rank_to_json(const analyze::ConstRankReport& rep) {
    json j;
    j["target_rank"] = rep.target_rank;
    j["max_dim_searched"] = rep.max_dim_searched;
    j["max_dim_found"] = rep.max_dim_found;
    j["exhaustive"] = rep.exhaustive;
    j["certificate_verified"] = rep.certificate_verified;
    j["combos_checked"] = rep.combos_checked;
    json cert = json::array();
    for (const auto& c : rep.certificate) cert.push_back(c);
    j["certificate"] = std::move(cert);
    json checks = json::array();
    for (const auto& c : rep.bound_checks) {
        json cj;
        cj["name"] = c.name;
        cj["statement"] = c.statement;
        cj["pass"] = c.pass;
        checks.push_back(std::move(cj));
    }
    j["bound_checks"] = std::move(checks);
    j["bounds_pass"] = rep.bounds_pass;
    return j;
}

json isotropic_to_json(const analyze::IsotropicReport& rep) {
    json j;
    j["count"] = rep.count;
    j["expected"] = rep.expected;
    j["asserted"] = rep.asserted;
    j["pass"] = rep.pass;
    return j;
}

json inverse_subspace_to_json(const analyze::InverseSubspaceReport& rep) {
    json j;
    j["precondition_ok"] = rep.precondition_ok;
    j["note"] = rep.note;
    j["a_count"] = rep.a_count;
    j["u_count"] = rep.u_count;
    j["violating_pairs"] = rep.violating_pairs;
    j["pass"] = rep.pass;
    return j;
}

}  // namespace formrank::io
