/*
   Copyright 2026 The agqc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef AGQC_FIELD_HPP
#define AGQC_FIELD_HPP

#include <cstdint>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace agqc {

/// An element of a finite field GF(p^k), stored by its integer encoding
/// enc(e) = sum coeffs[i] * p^i. Only meaningful together with its Field.
struct Elem {
    std::uint32_t v = 0;

    friend constexpr auto operator<=>(Elem, Elem) = default;
};

struct FieldSpec {
    unsigned p = 2;
    unsigned k = 1;
    std::vector<unsigned> modulus;  // k + 1 coefficients, ascending, monic

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Default moduli per (p, k), keyed by that pair.
class ModuliTable {
public:
    using Key = std::pair<unsigned, unsigned>;

    /// The table compiled into the library; identical to config/moduli.conf.
    static const ModuliTable& builtin();

    /// Parses the "gf(p,k) = c0 c1 ... ck" key-value format.
    static ModuliTable parse(std::istream& in);
    static ModuliTable load(const std::string& path);

    const std::vector<unsigned>& at(unsigned p, unsigned k) const;
    bool contains(unsigned p, unsigned k) const { return entries_.count({p, k}) != 0; }
    const std::map<Key, std::vector<unsigned>>& entries() const { return entries_; }

    void set(unsigned p, unsigned k, std::vector<unsigned> modulus) { entries_[{p, k}] = std::move(modulus); }

private:
    std::map<Key, std::vector<unsigned>> entries_;
};

bool is_prime(std::uint64_t n);

/// Trial division by every monic polynomial of degree <= k/2 over GF(p).
bool is_irreducible_mod_p(unsigned p, std::span<const unsigned> poly);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Builds GF(p^k). Without an explicit modulus the default from `table` is used.
/// Throws std::invalid_argument for a non-prime p, a modulus of the wrong
/// degree or a reducible modulus.
FieldPtr build_field(unsigned p, unsigned k, std::optional<std::vector<unsigned>> modulus = std::nullopt,
                     const ModuliTable& table = ModuliTable::builtin());
FieldPtr build_field(const FieldSpec& spec);

FieldSpec default_spec(unsigned p, unsigned k, const ModuliTable& table = ModuliTable::builtin());

/// Immutable GF(p^k) context with log/antilog tables (p^k <= 2^16).
/// Addition in odd characteristic goes through Zech logarithms.
class Field {
public:
    explicit Field(FieldSpec spec);

    const FieldSpec& spec() const { return spec_; }
    unsigned characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    std::uint32_t size() const { return q_; }
    std::uint32_t order_mult() const { return q_ - 1; }
    /// FNV-1a over the textual modulus; identifies a field in cache headers.
    std::uint64_t modulus_hash() const;

    Elem zero() const { return {0}; }
    Elem one() const { return {1}; }
    Elem from_int(long long n) const;
    Elem from_enc(std::uint32_t enc) const;
    Elem from_coeffs(std::span<const unsigned> coeffs) const;
    std::vector<unsigned> coeffs(Elem a) const;
    Elem generator() const { return {exp_[q_ > 1 ? 1 % (q_ - 1) : 0]}; }
    bool contains(Elem a) const { return a.v < q_; }

    Elem add(Elem a, Elem b) const {
        if (p_ == 2) return {a.v ^ b.v};
        if (a.v == 0) return b;
        if (b.v == 0) return a;
        std::uint32_t la = log_[a.v];
        std::uint32_t lb = log_[b.v];
        std::uint32_t d = lb >= la ? lb - la : lb + (q_ - 1) - la;
        std::uint32_t z = zech_[d];
        if (z == kNoLog) return {0};
        return {exp_[la + z]};
    }
    Elem neg(Elem a) const { return p_ == 2 ? a : Elem{neg_[a.v]}; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (a.v == 0 || b.v == 0) return {0};
        return {exp_[log_[a.v] + log_[b.v]]};
    }
    /// Throws std::domain_error on zero.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    /// Square-and-multiply; pow(0, 0) == 1.
    Elem pow(Elem a, std::uint64_t e) const;

    /// Discrete log to the base generator(); a must be nonzero.
    std::uint32_t log(Elem a) const;
    Elem exp(std::uint64_t e) const { return {exp_[e % (q_ - 1)]}; }

    /// All p^k elements in ascending enc order.
    std::vector<Elem> elements() const;

    static constexpr std::uint32_t kNoLog = 0xffffffffu;

private:
    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;

    FieldSpec spec_;
    unsigned p_;
    unsigned k_;
    std::uint32_t q_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;  // length 2(q - 1), so log sums never wrap
    std::vector<std::uint32_t> zech_;
    std::vector<std::uint32_t> neg_;
};

/// An element bound to its field, for call sites that prefer operators.
/// Mixing values from different fields throws std::invalid_argument.
class FieldValue {
public:
    FieldValue(FieldPtr field, Elem e);

    const FieldPtr& field() const { return field_; }
    Elem elem() const { return e_; }

    FieldValue operator+(const FieldValue& o) const;
    FieldValue operator-(const FieldValue& o) const;
    FieldValue operator*(const FieldValue& o) const;
    FieldValue operator/(const FieldValue& o) const;
    FieldValue operator-() const;
    FieldValue inverse() const;
    FieldValue pow(std::uint64_t e) const;

    bool operator==(const FieldValue& o) const;

private:
    const Field& same(const FieldValue& o) const;

    FieldPtr field_;
    Elem e_;
};

}  // namespace agqc

#endif
