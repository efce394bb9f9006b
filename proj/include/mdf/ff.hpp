#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mdf/error.hpp"

namespace mdf {

/// An element of a finite field, identified by its index in [0, q).
/// Index 0 is the additive identity, index 1 the multiplicative identity.
/// For extension fields the index encodes the coefficient vector of the
/// element written in the power basis, base-p digits with x^0 lowest.
struct FieldElem {
    std::uint32_t index = 0;
    friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

/// Exact arithmetic in GF(q), q = p^k.  Immutable after construction and
/// safe to share across threads; all operations are pure lookups.
///
/// Multiplication uses log/antilog tables built from a primitive element
/// found at construction.  Addition is a table for small q, digitwise mod-p
/// arithmetic otherwise.
class Fq {
  public:
    /// Build GF(p^k).  For k > 1 the modulus is the coefficient vector
    /// (ascending, length k+1, monic) of an irreducible polynomial over
    /// GF(p); if omitted, the lexicographically smallest monic irreducible
    /// polynomial is used, which requires p^k <= 64.
    static Fq make(std::uint64_t p, std::uint32_t k = 1,
                   const std::vector<std::uint32_t>& modulus = {});

    std::uint64_t p() const { return d_->p; }
    std::uint32_t k() const { return d_->k; }
    std::uint64_t q() const { return d_->q; }
    const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }

    FieldElem zero() const { return {0}; }
    FieldElem one() const { return {1}; }
    bool is_zero(FieldElem a) const { return a.index == 0; }

    FieldElem elem(std::uint64_t index) const {
        if (index >= d_->q) fail(errc::input_error, "element index out of range");
        return {static_cast<std::uint32_t>(index)};
    }

    /// Embedding of an integer into the prime subfield (v mod p).
    FieldElem from_int(long long v) const;

    FieldElem add(FieldElem a, FieldElem b) const {
        if (!d_->add_table.empty()) return {d_->add_table[a.index * d_->q + b.index]};
        return add_slow(a, b);
    }
    FieldElem neg(FieldElem a) const;
    FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

    FieldElem mul(FieldElem a, FieldElem b) const {
        if (a.index == 0 || b.index == 0) return {0};
        return {d_->exp_table[d_->log_table[a.index] + d_->log_table[b.index]]};
    }
    FieldElem inv(FieldElem a) const {
        if (a.index == 0) fail(errc::division_by_zero, "inverse of zero");
        std::uint64_t n = d_->q - 1;
        return {d_->exp_table[(n - d_->log_table[a.index]) % n]};
    }
    FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

    /// a^e for e >= 0 (0^0 = 1).
    FieldElem pow(FieldElem a, std::uint64_t e) const;

    std::vector<FieldElem> elements() const;
    std::vector<FieldElem> nonzero_elements() const;

    /// Parseable/printable spec, "p" or "p^k".
    std::string spec() const;

    friend bool operator==(const Fq& a, const Fq& b) {
        return a.d_->p == b.d_->p && a.d_->k == b.d_->k && a.d_->modulus == b.d_->modulus;
    }

  private:
    struct Data {
        std::uint64_t p = 0;
        std::uint32_t k = 1;
        std::uint64_t q = 0;
        std::vector<std::uint32_t> modulus;    // empty for k == 1
        std::vector<std::uint32_t> log_table;  // index -> discrete log (index >= 1)
        std::vector<std::uint32_t> exp_table;  // length 2(q-1), doubled to skip a mod
        std::vector<std::uint32_t> add_table;  // q*q, only for small q
    };

    explicit Fq(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    FieldElem add_slow(FieldElem a, FieldElem b) const;

    std::shared_ptr<const Data> d_;
};

bool is_prime(std::uint64_t n);

}  // namespace mdf
