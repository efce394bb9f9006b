#include "mdf/ff.hpp"

#include <algorithm>

namespace mdf {

namespace {

// Polynomials over GF(p): ascending coefficient vectors, no trailing zeros.

using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g, g monic.
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
    trim(f);
    while (f.size() >= g.size()) {
        std::uint64_t lead = f.back();
        std::size_t shift = f.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::uint64_t t = f[shift + i] + (p - (lead * g[i]) % p);
            f[shift + i] = static_cast<std::uint32_t>(t % p);
        }
        trim(f);
    }
    return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    return poly_mod(std::move(r), mod, p);
}

std::uint64_t poly_to_index(const Poly& f, std::uint64_t p) {
    std::uint64_t idx = 0;
    for (std::size_t i = f.size(); i-- > 0;) idx = idx * p + f[i];
    return idx;
}

Poly index_to_poly(std::uint64_t idx, std::uint64_t p) {
    Poly f;
    while (idx) {
        f.push_back(static_cast<std::uint32_t>(idx % p));
        idx /= p;
    }
    return f;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
    // Degree-k monic polynomial; brute-force trial division by all monic
    // polynomials of degree 1..k/2.  Desk scale: p^k <= 2^16.
    std::size_t k = f.size() - 1;
    if (k == 0) return false;
    for (std::size_t deg = 1; 2 * deg <= k; ++deg) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < deg; ++i) count *= p;
        for (std::uint64_t low = 0; low < count; ++low) {
            Poly g = index_to_poly(low, p);
            g.resize(deg + 1, 0);
            g[deg] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

Poly find_irreducible(std::uint64_t p, std::uint32_t k) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
        Poly f = index_to_poly(low, p);
        f.resize(k + 1, 0);
        f[k] = 1;
        if (is_irreducible(f, p)) return f;
    }
    fail(errc::unsupported_order, "no irreducible polynomial found");  // unreachable for valid p, k
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Fq Fq::make(std::uint64_t p, std::uint32_t k, const std::vector<std::uint32_t>& modulus) {
    if (!is_prime(p)) fail(errc::not_prime, "characteristic " + std::to_string(p) + " is not prime");
    if (k < 1) fail(errc::input_error, "extension degree must be >= 1");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        if (q > (std::uint64_t(1) << 20) / p) fail(errc::unsupported_order, "field order too large");
        q *= p;
    }

    auto data = std::make_shared<Data>();
    data->p = p;
    data->k = k;
    data->q = q;

    if (k > 1) {
        Poly mod;
        if (modulus.empty()) {
            if (q > 64)
                fail(errc::unsupported_order,
                     "no built-in modulus for q = " + std::to_string(q) + " > 64; supply one");
            mod = find_irreducible(p, k);
        } else {
            mod = modulus;
            trim(mod);
            if (mod.size() != k + 1 || mod.back() != 1)
                fail(errc::reducible_modulus, "modulus must be monic of degree k");
            for (auto c : mod)
                if (c >= p) fail(errc::input_error, "modulus coefficient out of range");
            if (!is_irreducible(mod, p)) fail(errc::reducible_modulus, "modulus is reducible over GF(p)");
        }
        data->modulus = {mod.begin(), mod.end()};
    } else if (!modulus.empty()) {
        fail(errc::input_error, "modulus given for a prime field");
    }

    // Find a primitive element and build log/antilog tables.
    Poly mod = data->modulus.empty() ? Poly{} : Poly(data->modulus.begin(), data->modulus.end());
    data->log_table.assign(q, 0);
    data->exp_table.assign(2 * (q - 1), 0);
    bool found = false;
    for (std::uint64_t g = (q == 2 ? 1 : 2); g < q && !found; ++g) {
        std::vector<std::uint32_t> logt(q, 0);
        std::vector<std::uint32_t> expt(q - 1, 0);
        Poly gen = index_to_poly(g, p);
        Poly cur = {1};
        std::uint64_t ord = 0;
        for (; ord < q - 1; ++ord) {
            std::uint64_t idx = poly_to_index(cur, p);
            if (ord > 0 && idx == 1) break;
            expt[ord] = static_cast<std::uint32_t>(idx);
            logt[idx] = static_cast<std::uint32_t>(ord);
            if (k == 1)
                cur = index_to_poly((poly_to_index(cur, p) * g) % p, p);
            else
                cur = poly_mulmod(cur, gen, mod, p);
        }
        if (ord == q - 1 && poly_to_index(cur, p) == 1) {
            data->log_table = std::move(logt);
            for (std::uint64_t i = 0; i < q - 1; ++i) {
                data->exp_table[i] = expt[i];
                data->exp_table[i + (q - 1)] = expt[i];
            }
            found = true;
        }
    }
    if (!found) fail(errc::unsupported_order, "no primitive element found");  // cannot happen

    if (q <= 4096) {
        data->add_table.assign(q * q, 0);
        for (std::uint64_t a = 0; a < q; ++a)
            for (std::uint64_t b = 0; b < q; ++b) {
                std::uint64_t ra = a, rb = b, r = 0, place = 1;
                while (ra || rb) {
                    r += place * ((ra % p + rb % p) % p);
                    ra /= p;
                    rb /= p;
                    place *= p;
                }
                data->add_table[a * q + b] = static_cast<std::uint32_t>(r);
            }
    }

    Fq F(std::move(data));
    // Cyclic-group sanity check: x^(q-1) = 1 for every nonzero x.
    if (q <= 4096)
        for (std::uint64_t i = 1; i < q; ++i)
            if (F.pow({static_cast<std::uint32_t>(i)}, q - 1).index != 1)
                fail(errc::unsupported_order, "field construction self-check failed");
    return F;
}

FieldElem Fq::add_slow(FieldElem a, FieldElem b) const {
    std::uint64_t p = d_->p, ra = a.index, rb = b.index, r = 0, place = 1;
    while (ra || rb) {
        r += place * ((ra % p + rb % p) % p);
        ra /= p;
        rb /= p;
        place *= p;
    }
    return {static_cast<std::uint32_t>(r)};
}

FieldElem Fq::neg(FieldElem a) const {
    std::uint64_t p = d_->p, ra = a.index, r = 0, place = 1;
    while (ra) {
        r += place * ((p - ra % p) % p);
        ra /= p;
        place *= p;
    }
    return {static_cast<std::uint32_t>(r)};
}

FieldElem Fq::pow(FieldElem a, std::uint64_t e) const {
    if (e == 0) return one();
    if (a.index == 0) return zero();
    std::uint64_t n = d_->q - 1;
    std::uint64_t l = (static_cast<std::uint64_t>(d_->log_table[a.index]) * (e % n)) % n;
    return {d_->exp_table[l]};
}

FieldElem Fq::from_int(long long v) const {
    long long p = static_cast<long long>(d_->p);
    long long r = ((v % p) + p) % p;
    return {static_cast<std::uint32_t>(r)};
}

std::vector<FieldElem> Fq::elements() const {
    std::vector<FieldElem> out(d_->q);
    for (std::uint64_t i = 0; i < d_->q; ++i) out[i] = {static_cast<std::uint32_t>(i)};
    return out;
}

std::vector<FieldElem> Fq::nonzero_elements() const {
    std::vector<FieldElem> out(d_->q - 1);
    for (std::uint64_t i = 1; i < d_->q; ++i) out[i - 1] = {static_cast<std::uint32_t>(i)};
    return out;
}

std::string Fq::spec() const {
    if (d_->k == 1) return std::to_string(d_->p);
    return std::to_string(d_->p) + "^" + std::to_string(d_->k);
}

}  // namespace mdf
