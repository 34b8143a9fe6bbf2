#include "formrank/construct.hpp"

#include <stdexcept>

namespace formrank::construct {

using formspace::FormKind;
using formspace::Provenance;
using gf::Elt;
using gf::Field;
using gf::SubfieldMap;

namespace {

std::uint64_t detail_pow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

struct Tower {
    Field K;              // GF(q), the matrix entry field
    Field L;              // extension, with the trace to GF(q) declared
    SubfieldMap map;      // K into L
    std::vector<Elt> basis;  // K-basis of L: powers of the modulus root
};

Tower make_tower(std::uint64_t q, unsigned rel_degree) {
    Field K = Field::make_order(q);
    unsigned p = K.characteristic();
    Field L = Field::make(p, K.degree() * rel_degree).with_subfield(q);
    SubfieldMap map(K, L);
    std::vector<Elt> basis = L.subfield_basis();
    return Tower{std::move(K), std::move(L), std::move(map), std::move(basis)};
}

// Flatten a K-valued form on span(ws) x span(ws) to a matrix over K.
template <class FormFn>
linalg::Mat flatten(const Tower& tw, const std::vector<Elt>& ws, FormFn&& f) {
    const unsigned n = static_cast<unsigned>(ws.size());
    linalg::Mat A(tw.K, n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) A(i, j) = tw.map.project(f(ws[i], ws[j]));
    return A;
}

// Kernel of a K-linear map on L, returned as elements of L (deterministic
// echelon basis of the coordinate kernel).
template <class MapFn>
std::vector<Elt> kernel_elements(const Tower& tw, MapFn&& T) {
    const unsigned N = static_cast<unsigned>(tw.basis.size());
    linalg::Mat Mt(tw.K, N, N);
    for (unsigned j = 0; j < N; ++j) {
        auto col = tw.map.coords(T(tw.basis[j]));
        for (unsigned i = 0; i < N; ++i) Mt(i, j) = col[i];
    }
    auto ker = linalg::right_nullspace(Mt);
    std::vector<Elt> out;
    out.reserve(ker.dim());
    for (unsigned i = 0; i < ker.dim(); ++i) {
        auto row = ker.basis_row(i);
        out.push_back(tw.map.from_coords(std::vector<Elt>(row.begin(), row.end())));
    }
    return out;
}

}  // namespace

FormSpace linearized_two_rank(std::uint64_t q, unsigned m, unsigned s) {
    if (m < 1 || s < 2)
        throw std::invalid_argument("linearized_two_rank requires m >= 1 and s >= 2 (0 < r < n)");
    const unsigned n = m * s;
    Tower tw = make_tower(q, n);  // W = GF(q^(ms)) over GF(q)
    const std::uint64_t Q = detail_pow(q, m);

    std::vector<linalg::Mat> mats;
    mats.reserve(2 * n);
    for (Elt a : tw.basis)
        mats.push_back(flatten(tw, tw.basis, [&](Elt x, Elt y) {
            return tw.L.rel_trace(tw.L.mul(y, tw.L.mul(a, x)));
        }));
    for (Elt b : tw.basis)
        mats.push_back(flatten(tw, tw.basis, [&](Elt x, Elt y) {
            return tw.L.rel_trace(tw.L.mul(y, tw.L.mul(b, tw.L.pow(x, Q))));
        }));
    Provenance prov{"linearized-two-rank", {{"q", q}, {"m", m}, {"s", s}}};
    return FormSpace(tw.K, n, FormKind::bilinear, std::move(mats), prov);
}

namespace {

FormSpace restricted_trace_forms(std::uint64_t q, unsigned m, unsigned s, Provenance prov) {
    const unsigned n = m * s;
    Tower tw = make_tower(q, m * (s + 1));  // L = GF(q^(m(s+1)))
    const std::uint64_t qm = detail_pow(q, m);
    Field Lqm = tw.L.with_subfield(qm);

    // W: trace-zero GF(q^m)-hyperplane of L, as a GF(q)-space of dimension n
    std::vector<Elt> ws = kernel_elements(tw, [&](Elt x) { return Lqm.rel_trace(x); });
    if (ws.size() != n) throw std::logic_error("trace-zero subspace has unexpected dimension");

    std::vector<linalg::Mat> mats;
    mats.reserve(tw.basis.size());
    for (Elt z : tw.basis)
        mats.push_back(flatten(tw, ws, [&](Elt x, Elt y) {
            return tw.L.rel_trace(tw.L.mul(z, tw.L.mul(x, y)));
        }));
    return FormSpace(tw.K, n, FormKind::symmetric, std::move(mats), std::move(prov));
}

}  // namespace

FormSpace symmetric_two_rank(std::uint64_t q, unsigned m, unsigned s) {
    if (m < 1 || s < 2)
        throw std::invalid_argument("symmetric_two_rank requires m >= 1 and s >= 2 (n >= 2, r >= 1)");
    return restricted_trace_forms(q, m, s,
                                  Provenance{"symmetric-two-rank", {{"q", q}, {"m", m}, {"s", s}}});
}

FormSpace trace_hyperplane(std::uint64_t q, unsigned n) {
    if (n < 2) throw std::invalid_argument("trace_hyperplane requires n >= 2");
    return restricted_trace_forms(q, 1, n, Provenance{"trace-hyperplane", {{"q", q}, {"n", n}}});
}

FormSpace cyclic_symmetric(std::uint64_t q, unsigned n) {
    if (n < 3) throw std::invalid_argument("cyclic_symmetric requires n >= 3");
    Tower tw = make_tower(q, n);
    auto sigma = [&](Elt x) { return tw.L.frobenius(x, 1); };

    std::vector<linalg::Mat> mats;
    mats.reserve(2 * n);
    for (Elt lam : tw.basis)
        mats.push_back(flatten(tw, tw.basis, [&](Elt x, Elt y) {
            return tw.L.rel_trace(tw.L.mul(lam, tw.L.mul(x, y)));
        }));
    for (Elt mu : tw.basis)
        mats.push_back(flatten(tw, tw.basis, [&](Elt x, Elt y) {
            Elt t = tw.L.add(tw.L.mul(x, sigma(y)), tw.L.mul(sigma(x), y));
            return tw.L.rel_trace(tw.L.mul(mu, t));
        }));
    Provenance prov{"cyclic-symmetric", {{"q", q}, {"n", n}}};
    return FormSpace(tw.K, n, FormKind::symmetric, std::move(mats), prov);
}

FormSpace cyclic_alternating(std::uint64_t q, unsigned m) {
    if (m < 2) throw std::invalid_argument("cyclic_alternating requires m >= 2");
    const unsigned n = 2 * m;
    Tower tw = make_tower(q, n);
    auto sigma = [&](Elt x, unsigned e) { return tw.L.frobenius(x, e); };

    // L' = { x : sigma^m(x) = -x }, an m-dimensional GF(q)-subspace
    std::vector<Elt> lam_basis =
        kernel_elements(tw, [&](Elt x) { return tw.L.add(sigma(x, m), x); });
    if (lam_basis.size() != m) throw std::logic_error("L' has unexpected dimension");

    std::vector<linalg::Mat> mats;
    mats.reserve(3 * m);
    for (Elt lam : lam_basis)
        mats.push_back(flatten(tw, tw.basis, [&](Elt x, Elt y) {
            return tw.L.rel_trace(tw.L.mul(lam, tw.L.mul(sigma(x, m), y)));
        }));
    for (Elt mu : tw.basis)
        mats.push_back(flatten(tw, tw.basis, [&](Elt x, Elt y) {
            Elt t = tw.L.sub(tw.L.mul(x, sigma(y, m - 1)), tw.L.mul(sigma(x, m - 1), y));
            return tw.L.rel_trace(tw.L.mul(mu, t));
        }));
    Provenance prov{"cyclic-alternating", {{"q", q}, {"m", m}}};
    return FormSpace(tw.K, n, FormKind::alternating, std::move(mats), prov);
}

FormSpace trace_forms(std::uint64_t q, unsigned n) {
    if (n < 1) throw std::invalid_argument("trace_forms requires n >= 1");
    Tower tw = make_tower(q, n);
    std::vector<linalg::Mat> mats;
    mats.reserve(n);
    for (Elt z : tw.basis)
        mats.push_back(flatten(tw, tw.basis, [&](Elt x, Elt y) {
            return tw.L.rel_trace(tw.L.mul(z, tw.L.mul(x, y)));
        }));
    Provenance prov{"trace-forms", {{"q", q}, {"n", n}}};
    return FormSpace(tw.K, n, FormKind::symmetric, std::move(mats), prov);
}

namespace {

std::uint64_t need(const std::map<std::string, std::uint64_t>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw std::invalid_argument("missing parameter --" + key);
    return it->second;
}

}  // namespace

FormSpace by_family(const std::string& family, const std::map<std::string, std::uint64_t>& params) {
    std::uint64_t q = need(params, "q");
    if (family == "linearized-two-rank")
        return linearized_two_rank(q, static_cast<unsigned>(need(params, "m")),
                                   static_cast<unsigned>(need(params, "s")));
    if (family == "symmetric-two-rank")
        return symmetric_two_rank(q, static_cast<unsigned>(need(params, "m")),
                                  static_cast<unsigned>(need(params, "s")));
    if (family == "cyclic-symmetric")
        return cyclic_symmetric(q, static_cast<unsigned>(need(params, "n")));
    if (family == "cyclic-alternating")
        return cyclic_alternating(q, static_cast<unsigned>(need(params, "m")));
    if (family == "trace-hyperplane")
        return trace_hyperplane(q, static_cast<unsigned>(need(params, "n")));
    throw std::invalid_argument("unknown family: " + family);
}

}  // namespace formrank::construct
