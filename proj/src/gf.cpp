#include "formrank/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace formrank::gf {

namespace {

using Poly = std::vector<unsigned>;  // little-endian coefficients over GF(p)

// Hard cap on field size; exp/log tables are built for every field.
constexpr std::uint64_t kMaxOrder = 1ull << 22;
// Fields up to this order additionally get q*q add/mul/div tables.
constexpr std::uint64_t kDenseTableLimit = 1024;
// FieldOps raw views are handed out only below this order.
constexpr std::uint64_t kOpsLimit = 512;

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

void ptrim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmul_mod(const Poly& a, const Poly& b, const Poly& mod, unsigned p) {
    const std::size_t k = mod.size() - 1;
    std::vector<unsigned> res(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            res[i + j] += a[i] * b[j];  // bounded by k*(p-1)^2, no overflow
    }
    for (auto& c : res) c %= p;
    for (std::size_t i = res.size(); i-- > k;) {
        unsigned c = res[i];
        if (!c) continue;
        res[i] = 0;
        for (std::size_t j = 0; j <= k; ++j) {
            unsigned& t = res[i - k + j];
            t = (t + (p - 1) * c % p * mod[j]) % p;  // t -= c*mod[j]
        }
    }
    res.resize(k);
    return res;
}

Poly ppow_mod(Poly base, std::uint64_t e, const Poly& mod, unsigned p) {
    Poly r{1};
    r.resize(mod.size() - 1, 0);
    base.resize(mod.size() - 1, 0);
    while (e) {
        if (e & 1) r = pmul_mod(r, base, mod, p);
        base = pmul_mod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

// x^(p^e) mod f by iterated x -> x^p
Poly frob_power_of_x(unsigned e, const Poly& mod, unsigned p) {
    Poly t(mod.size() - 1, 0);
    if (mod.size() - 1 == 1) {
        // GF(p): x == -c0 mod (x + c0)
        t[0] = (p - mod[0]) % p;
    } else {
        t[1] = 1;
    }
    for (unsigned i = 0; i < e; ++i) t = ppow_mod(t, p, mod, p);
    return t;
}

Poly pmod(Poly a, const Poly& m, unsigned p) {
    ptrim(a);
    Poly mm = m;
    ptrim(mm);
    while (a.size() >= mm.size() && !mm.empty()) {
        unsigned lead_inv = 1;
        // m monic in our uses, but normalize defensively
        unsigned lm = mm.back();
        for (unsigned x = 1; x < p; ++x)
            if (x * lm % p == 1) { lead_inv = x; break; }
        unsigned c = a.back() * lead_inv % p;
        std::size_t off = a.size() - mm.size();
        for (std::size_t j = 0; j < mm.size(); ++j)
            a[off + j] = (a[off + j] + (p - 1) * c % p * mm[j]) % p;
        ptrim(a);
    }
    return a;
}

Poly pgcd(Poly a, Poly b, unsigned p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        Poly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin's test: f monic of degree k is irreducible over GF(p) iff
// x^(p^k) == x mod f and gcd(x^(p^(k/l)) - x, f) == 1 for prime l | k.
bool is_irreducible(const Poly& mod, unsigned p) {
    const unsigned k = static_cast<unsigned>(mod.size() - 1);
    if (k == 1) return true;
    Poly xk = frob_power_of_x(k, mod, p);
    Poly x(k, 0);
    x[1] = 1;
    if (xk != x) return false;
    for (std::uint64_t l : prime_factors(k)) {
        Poly g = frob_power_of_x(static_cast<unsigned>(k / l), mod, p);
        // g - x
        g[1] = (g[1] + p - 1) % p;
        Poly d = pgcd(g, mod, p);
        if (!(d.size() == 1 && d[0] != 0)) return false;
    }
    return true;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

namespace detail {

struct FieldImpl {
    unsigned p = 0, k = 0;
    std::uint64_t q = 0;
    std::vector<unsigned> modulus;  // length k+1, monic
    std::vector<std::uint64_t> ppow;  // p^0 .. p^k

    Elt generator = 0;       // primitive element
    std::vector<Elt> expt;   // size q-1
    std::vector<Elt> logt;   // size q, logt[0] unused

    // dense tables, present when q <= kDenseTableLimit
    std::vector<Elt> add2, mul2, div2;
    std::vector<Elt> neg1, inv1;

    Elt encode(const Poly& digits) const {
        std::uint64_t v = 0;
        for (unsigned i = k; i-- > 0;) v = v * p + (i < digits.size() ? digits[i] : 0);
        return static_cast<Elt>(v);
    }
    Poly decode(Elt a) const {
        Poly d(k);
        std::uint64_t v = a;
        for (unsigned i = 0; i < k; ++i) {
            d[i] = static_cast<unsigned>(v % p);
            v /= p;
        }
        return d;
    }

    Elt add_slow(Elt a, Elt b) const {
        Poly da = decode(a), db = decode(b);
        for (unsigned i = 0; i < k; ++i) da[i] = (da[i] + db[i]) % p;
        return encode(da);
    }
    Elt neg_slow(Elt a) const {
        Poly da = decode(a);
        for (unsigned i = 0; i < k; ++i) da[i] = (p - da[i]) % p;
        return encode(da);
    }

    Elt add(Elt a, Elt b) const {
        if (!add2.empty()) return add2[a * q + b];
        return add_slow(a, b);
    }
    Elt neg(Elt a) const {
        if (!neg1.empty()) return neg1[a];
        return neg_slow(a);
    }
    Elt mul(Elt a, Elt b) const {
        if (!a || !b) return 0;
        std::uint64_t s = logt[a] + logt[b];
        if (s >= q - 1) s -= q - 1;
        return expt[s];
    }
    Elt inv(Elt a) const {
        std::uint64_t l = logt[a];
        return l == 0 ? a : expt[q - 1 - l];
    }
    Elt pow_elt(Elt a, std::uint64_t e) const {
        if (q == 2) return a ? 1 : (e ? 0 : 1);
        if (!a) return e ? 0 : 1;
        std::uint64_t l = (logt[a] % (q - 1)) * (e % (q - 1)) % (q - 1);
        return expt[l];
    }
};

}  // namespace detail

using detail::FieldImpl;

namespace {

std::shared_ptr<const FieldImpl> build_impl(unsigned p, unsigned k, std::vector<unsigned> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (k < 1) throw std::invalid_argument("degree must be at least 1");
    if (modulus.size() != static_cast<std::size_t>(k) + 1 || modulus[k] != 1)
        throw std::invalid_argument("modulus must be monic of degree k");
    for (unsigned c : modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (!is_irreducible(modulus, p))
        throw std::invalid_argument("modulus is reducible over GF(p)");

    auto impl = std::make_shared<FieldImpl>();
    impl->p = p;
    impl->k = k;
    impl->modulus = std::move(modulus);
    std::uint64_t q = 1;
    impl->ppow.push_back(1);
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxOrder) throw std::invalid_argument("field order exceeds supported limit");
        impl->ppow.push_back(q);
    }
    impl->q = q;

    // primitive element (least, by element index) and exp/log tables
    const auto& mod = impl->modulus;
    if (q == 2) {
        impl->generator = 1;
        impl->expt = {1};
        impl->logt = {0, 0};
    } else {
        auto factors = prime_factors(q - 1);
        Elt g = 0;
        for (Elt cand = 2; cand < q; ++cand) {
            Poly pc = impl->decode(cand);
            bool ok = true;
            for (std::uint64_t l : factors) {
                Poly t = ppow_mod(pc, (q - 1) / l, mod, p);
                ptrim(t);
                if (t.size() == 1 && t[0] == 1) { ok = false; break; }
            }
            if (ok) { g = cand; break; }
        }
        if (!g) throw std::logic_error("no primitive element found");
        impl->generator = g;
        impl->expt.resize(q - 1);
        impl->logt.assign(q, 0);
        Poly cur{1};
        cur.resize(k, 0);
        Poly gp = impl->decode(g);
        for (std::uint64_t i = 0; i < q - 1; ++i) {
            Elt e = impl->encode(cur);
            impl->expt[i] = e;
            impl->logt[e] = static_cast<Elt>(i);
            cur = pmul_mod(cur, gp, mod, p);
        }
    }

    if (q <= kDenseTableLimit) {
        impl->neg1.resize(q);
        impl->inv1.resize(q);
        for (std::uint64_t a = 0; a < q; ++a) {
            impl->neg1[a] = impl->neg_slow(static_cast<Elt>(a));
            impl->inv1[a] = a ? impl->inv(static_cast<Elt>(a)) : 0;
        }
        impl->add2.resize(q * q);
        impl->mul2.resize(q * q);
        impl->div2.resize(q * q);
        for (std::uint64_t a = 0; a < q; ++a) {
            for (std::uint64_t b = 0; b < q; ++b) {
                impl->add2[a * q + b] = impl->add_slow(static_cast<Elt>(a), static_cast<Elt>(b));
                Elt m = impl->mul(static_cast<Elt>(a), static_cast<Elt>(b));
                impl->mul2[a * q + b] = m;
                impl->div2[a * q + b] = b ? impl->mul(static_cast<Elt>(a), impl->inv1[b]) : 0;
            }
        }
    }
    return impl;
}

std::shared_ptr<const FieldImpl> cached_impl(unsigned p, unsigned k, std::vector<unsigned> modulus) {
    using Key = std::tuple<unsigned, unsigned, std::vector<unsigned>>;
    static std::map<Key, std::shared_ptr<const FieldImpl>> cache;
    static std::mutex mtx;
    Key key{p, k, modulus};
    {
        std::lock_guard lock(mtx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto impl = build_impl(p, k, std::move(modulus));
    std::lock_guard lock(mtx);
    auto [it, _] = cache.emplace(std::move(key), std::move(impl));
    return it->second;
}

std::vector<unsigned> default_modulus(unsigned p, unsigned k) {
    using Key = std::pair<unsigned, unsigned>;
    static std::map<Key, std::vector<unsigned>> cache;
    static std::mutex mtx;
    {
        std::lock_guard lock(mtx);
        auto it = cache.find({p, k});
        if (it != cache.end()) return it->second;
    }
    std::uint64_t limit = ipow(p, k);
    for (std::uint64_t idx = 0; idx < limit; ++idx) {
        Poly mod(k + 1, 0);
        std::uint64_t v = idx;
        for (unsigned i = 0; i < k; ++i) {
            mod[i] = static_cast<unsigned>(v % p);
            v /= p;
        }
        mod[k] = 1;
        if (is_irreducible(mod, p)) {
            std::lock_guard lock(mtx);
            cache[{p, k}] = mod;
            return mod;
        }
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace

Field Field::make(unsigned p, unsigned k) {
    return make(p, k, default_modulus(p, k));
}

Field Field::make(unsigned p, unsigned k, std::vector<unsigned> modulus) {
    Field f;
    f.impl_ = cached_impl(p, k, std::move(modulus));
    return f;
}

Field Field::make_order(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("field order must be at least 2");
    std::uint64_t n = q;
    unsigned p = 0;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) { p = static_cast<unsigned>(d); break; }
    }
    if (!p) p = static_cast<unsigned>(n);  // q prime
    unsigned k = 0;
    while (n > 1) {
        if (n % p != 0) throw std::invalid_argument("order is not a prime power");
        n /= p;
        ++k;
    }
    return make(p, k);
}

Field Field::with_subfield(std::uint64_t q0) const {
    const auto& im = *impl_;
    // q0 = p^j with j | k
    std::uint64_t n = q0;
    unsigned j = 0;
    while (n > 1 && n % im.p == 0) {
        n /= im.p;
        ++j;
    }
    if (n != 1 || j == 0 || im.k % j != 0)
        throw std::invalid_argument("subfield order must be p^j with j dividing k");
    Field f = *this;
    f.subfield_order_ = q0;
    return f;
}

unsigned Field::characteristic() const { return impl_->p; }
unsigned Field::degree() const { return impl_->k; }
std::uint64_t Field::order() const { return impl_->q; }
const std::vector<unsigned>& Field::modulus() const { return impl_->modulus; }

bool Field::has_subfield() const { return subfield_order_ != 0; }
std::uint64_t Field::subfield_order() const {
    if (!subfield_order_) throw std::logic_error("no subfield declared");
    return subfield_order_;
}
unsigned Field::relative_degree() const {
    std::uint64_t q0 = subfield_order();
    unsigned j = 0;
    while (q0 > 1) {
        q0 /= impl_->p;
        ++j;
    }
    return impl_->k / j;
}

bool Field::same_spec(const Field& other) const {
    if (impl_ == other.impl_) return true;
    if (!impl_ || !other.impl_) return false;
    return impl_->p == other.impl_->p && impl_->k == other.impl_->k &&
           impl_->modulus == other.impl_->modulus;
}

Elt Field::add(Elt a, Elt b) const { return impl_->add(a, b); }
Elt Field::sub(Elt a, Elt b) const { return impl_->add(a, impl_->neg(b)); }
Elt Field::neg(Elt a) const { return impl_->neg(a); }
Elt Field::mul(Elt a, Elt b) const { return impl_->mul(a, b); }

Elt Field::inv(Elt a) const {
    if (!a) throw std::domain_error("inverse of zero");
    return impl_->inv(a);
}

Elt Field::div(Elt a, Elt b) const { return mul(a, inv(b)); }
Elt Field::pow(Elt a, std::uint64_t e) const { return impl_->pow_elt(a, e); }

Elt Field::frobenius(Elt a, unsigned e) const {
    std::uint64_t q0 = subfield_order();
    if (impl_->q == 2) return a;
    // exponent q0^e mod (q-1)
    std::uint64_t m = impl_->q - 1, exp = 1, base = q0 % m;
    for (unsigned i = e; i; i >>= 1) {
        if (i & 1) exp = exp * base % m;
        base = base * base % m;
    }
    return impl_->pow_elt(a, exp == 0 ? m : exp);
}

Elt Field::rel_trace(Elt a) const {
    unsigned m = relative_degree();
    Elt acc = 0, cur = a;
    for (unsigned i = 0; i < m; ++i) {
        acc = impl_->add(acc, cur);
        cur = frobenius(cur, 1);
    }
    return acc;
}

std::vector<Elt> Field::subfield_basis() const {
    unsigned m = relative_degree();
    std::vector<Elt> basis(m);
    Elt x = gen(), cur = 1;
    for (unsigned j = 0; j < m; ++j) {
        basis[j] = cur;
        cur = impl_->mul(cur, x);
    }
    return basis;
}

Elt Field::gen() const {
    if (impl_->k == 1) return static_cast<Elt>((impl_->p - impl_->modulus[0]) % impl_->p);
    return static_cast<Elt>(impl_->p);  // coefficient vector e_1
}

Elt Field::primitive() const { return impl_->generator; }

Elt Field::from_coeffs(std::span<const unsigned> coeffs) const {
    if (coeffs.size() != impl_->k) throw std::invalid_argument("coefficient vector has wrong length");
    Poly d(coeffs.begin(), coeffs.end());
    for (unsigned c : d)
        if (c >= impl_->p) throw std::invalid_argument("coefficient out of range");
    return impl_->encode(d);
}

std::vector<unsigned> Field::coeffs(Elt a) const { return impl_->decode(a); }

FieldOps Field::ops() const {
    const auto& im = *impl_;
    if (im.q > kOpsLimit || im.add2.empty())
        throw std::logic_error("dense field tables unavailable for this order");
    return FieldOps{im.q, im.add2.data(), im.mul2.data(), im.div2.data(),
                    im.neg1.data(), im.inv1.data()};
}

namespace {
void check_same(const FieldElement& a, const FieldElement& b) {
    if (!a.field.same_spec(b.field))
        throw std::invalid_argument("field elements from different fields");
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field, a.field.add(a.v, b.v)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field, a.field.sub(a.v, b.v)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field, a.field.mul(a.v, b.v)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return {a.field, a.field.div(a.v, b.v)};
}
bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field.same_spec(b.field) && a.v == b.v;
}
FieldElement FieldElement::inverse() const { return {field, field.inv(v)}; }

SubfieldMap::SubfieldMap(Field K, Field L) : K_(std::move(K)), L_(std::move(L)) {
    if (K_.characteristic() != L_.characteristic())
        throw std::invalid_argument("subfield map requires equal characteristic");
    if (L_.degree() % K_.degree() != 0)
        throw std::invalid_argument("subfield degree must divide field degree");
    m_ = L_.degree() / K_.degree();
    const unsigned p = L_.characteristic();
    const std::uint64_t q0 = K_.order(), q = L_.order();

    // least root of K's modulus among the subfield elements of order q0
    std::vector<Elt> subfield_elts{0};
    if (q0 == q) {
        subfield_elts.resize(q);
        std::iota(subfield_elts.begin(), subfield_elts.end(), 0);
    } else {
        Elt h = L_.pow(L_.primitive(), (q - 1) / (q0 - 1));
        Elt cur = 1;
        for (std::uint64_t i = 0; i + 1 < q0; ++i) {
            subfield_elts.push_back(cur);
            cur = L_.mul(cur, h);
        }
        std::sort(subfield_elts.begin(), subfield_elts.end());
    }
    const auto& m0 = K_.modulus();
    Elt root = 0;
    bool found = false;
    for (Elt y : subfield_elts) {
        Elt acc = 0;
        for (std::size_t i = m0.size(); i-- > 0;)
            acc = L_.add(L_.mul(acc, y), static_cast<Elt>(m0[i]));
        if (acc == 0) { root = y; found = true; break; }
    }
    if (!found) throw std::logic_error("no root of subfield modulus found");

    embed_.resize(q0);
    for (Elt a = 0; a < q0; ++a) {
        auto digits = K_.coeffs(a);
        Elt v = 0, rp = 1;
        for (unsigned c : digits) {
            v = L_.add(v, L_.mul(static_cast<Elt>(c), rp));
            rp = L_.mul(rp, root);
        }
        embed_[a] = v;
        project_.emplace(v, a);
    }

    // GF(p)-matrix of (u_0..u_{m-1}) |-> sum embed(u_j) x^j, then its inverse
    const unsigned kL = L_.degree(), kK = K_.degree();
    std::vector<unsigned> B(kL * kL);  // row-major, B[r*kL + c]
    Elt x = L_.gen();
    for (unsigned j = 0; j < m_; ++j) {
        Elt xj = L_.pow(x, j);
        for (unsigned l = 0; l < kK; ++l) {
            // K basis element t^l has element index p^l
            Elt tl = embed_[static_cast<Elt>(ipow(p, l))];
            auto col = L_.coeffs(L_.mul(tl, xj));
            unsigned c = j * kK + l;
            for (unsigned r = 0; r < kL; ++r) B[r * kL + c] = col[r];
        }
    }
    // Gauss-Jordan inverse mod p
    std::vector<unsigned> inv(kL * kL, 0);
    for (unsigned i = 0; i < kL; ++i) inv[i * kL + i] = 1;
    auto modinv = [p](unsigned a) {
        for (unsigned x2 = 1; x2 < p; ++x2)
            if (a * x2 % p == 1) return x2;
        throw std::logic_error("not invertible mod p");
    };
    for (unsigned col = 0, row = 0; col < kL; ++col) {
        unsigned piv = row;
        while (piv < kL && B[piv * kL + col] == 0) ++piv;
        if (piv == kL) throw std::logic_error("coordinate basis is singular");
        if (piv != row) {
            for (unsigned c = 0; c < kL; ++c) {
                std::swap(B[piv * kL + c], B[row * kL + c]);
                std::swap(inv[piv * kL + c], inv[row * kL + c]);
            }
        }
        unsigned f = modinv(B[row * kL + col]);
        for (unsigned c = 0; c < kL; ++c) {
            B[row * kL + c] = B[row * kL + c] * f % p;
            inv[row * kL + c] = inv[row * kL + c] * f % p;
        }
        for (unsigned r = 0; r < kL; ++r) {
            if (r == row) continue;
            unsigned g = B[r * kL + col];
            if (!g) continue;
            for (unsigned c = 0; c < kL; ++c) {
                B[r * kL + c] = (B[r * kL + c] + (p - 1) * g % p * B[row * kL + c]) % p;
                inv[r * kL + c] = (inv[r * kL + c] + (p - 1) * g % p * inv[row * kL + c]) % p;
            }
        }
        ++row;
    }
    coord_solver_ = std::move(inv);
}

Elt SubfieldMap::embed(Elt a) const { return embed_.at(a); }

bool SubfieldMap::in_subfield(Elt y) const { return project_.contains(y); }

Elt SubfieldMap::project(Elt y) const {
    auto it = project_.find(y);
    if (it == project_.end()) throw std::domain_error("element is not in the embedded subfield");
    return it->second;
}

std::vector<Elt> SubfieldMap::coords(Elt y) const {
    const unsigned p = L_.characteristic(), kL = L_.degree(), kK = K_.degree();
    auto digits = L_.coeffs(y);
    std::vector<unsigned> u(kL, 0);
    for (unsigned r = 0; r < kL; ++r) {
        unsigned acc = 0;
        for (unsigned c = 0; c < kL; ++c) acc = (acc + coord_solver_[r * kL + c] * digits[c]) % p;
        u[r] = acc;
    }
    std::vector<Elt> out(m_);
    for (unsigned j = 0; j < m_; ++j)
        out[j] = K_.from_coeffs(std::span<const unsigned>(u.data() + j * kK, kK));
    return out;
}

Elt SubfieldMap::from_coords(std::span<const Elt> u) const {
    if (u.size() != m_) throw std::invalid_argument("coordinate vector has wrong length");
    Elt x = L_.gen(), xj = 1, v = 0;
    for (unsigned j = 0; j < m_; ++j) {
        v = L_.add(v, L_.mul(embed_[u[j]], xj));
        xj = L_.mul(xj, x);
    }
    return v;
}

bool is_irreducible_quadratic(const Field& F, Elt lambda, Elt mu) {
    for (std::uint64_t x = 0; x < F.order(); ++x) {
        Elt xe = static_cast<Elt>(x);
        Elt v = F.add(F.add(F.mul(xe, xe), F.mul(lambda, xe)), mu);
        if (v == 0) return false;
    }
    return true;
}

std::pair<Elt, Elt> default_hermitian_pair(const Field& F) {
    const std::uint64_t q = F.order();
    if (F.characteristic() != 2) {
        // least non-square, by element index
        for (Elt a = 1; a < q; ++a) {
            if (F.pow(a, (q - 1) / 2) != 1) {
                Elt mu = F.neg(a);
                return {0, mu};
            }
        }
        throw std::logic_error("no non-square found");
    }
    for (std::uint64_t l = 0; l < q; ++l)
        for (std::uint64_t m = 0; m < q; ++m)
            if (is_irreducible_quadratic(F, static_cast<Elt>(l), static_cast<Elt>(m)))
                return {static_cast<Elt>(l), static_cast<Elt>(m)};
    throw std::logic_error("no irreducible quadratic found");
}

}  // namespace formrank::gf
