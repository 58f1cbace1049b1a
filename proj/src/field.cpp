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

#include "agqc/field.hpp"

#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace agqc {

namespace {

// Mirrors config/moduli.conf; a unit test keeps the two in sync.
const ModuliTable& make_builtin() {
    static const ModuliTable table = [] {
        ModuliTable t;
        t.set(2, 1, {1, 1});
        t.set(2, 2, {1, 1, 1});
        t.set(2, 3, {1, 1, 0, 1});
        t.set(2, 4, {1, 1, 0, 0, 1});
        t.set(2, 5, {1, 0, 1, 0, 0, 1});
        t.set(2, 6, {1, 1, 0, 1, 1, 0, 1});
        t.set(2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1});
        t.set(2, 10, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1});
        t.set(2, 12, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1});
        t.set(3, 1, {1, 1});
        t.set(3, 2, {2, 2, 1});
        t.set(3, 6, {2, 2, 1, 0, 2, 0, 1});
        t.set(5, 1, {3, 1});
        t.set(5, 2, {2, 4, 1});
        t.set(7, 1, {4, 1});
        return t;
    }();
    return table;
}

// Remainder of a mod b over GF(p); b monic. Coefficients ascending.
std::vector<unsigned> poly_mod_p(std::vector<unsigned> a, std::span<const unsigned> b, unsigned p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        unsigned lead = a.back();
        std::size_t shift = a.size() - 1 - db;
        if (lead != 0) {
            for (std::size_t i = 0; i <= db; ++i) {
                a[shift + i] = (a[shift + i] + p * p - lead * b[i] % p) % p;
            }
        }
        a.pop_back();
    }
    return a;
}

bool all_zero(const std::vector<unsigned>& v) {
    for (unsigned c : v)
        if (c != 0) return false;
    return true;
}

}  // namespace

const ModuliTable& ModuliTable::builtin() { return make_builtin(); }

ModuliTable ModuliTable::parse(std::istream& in) {
    static const std::regex line_re(R"(^\s*gf\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*=\s*([0-9 \t]+?)\s*$)");
    ModuliTable t;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::smatch m;
        if (!std::regex_match(line, m, line_re)) {
            throw std::invalid_argument("moduli file line " + std::to_string(lineno) + ": cannot parse '" + line + "'");
        }
        unsigned p = static_cast<unsigned>(std::stoul(m[1]));
        unsigned k = static_cast<unsigned>(std::stoul(m[2]));
        std::istringstream cs(m[3]);
        std::vector<unsigned> coeffs;
        unsigned c;
        while (cs >> c) coeffs.push_back(c);
        t.set(p, k, std::move(coeffs));
    }
    return t;
}

ModuliTable ModuliTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open moduli file " + path);
    return parse(in);
}

const std::vector<unsigned>& ModuliTable::at(unsigned p, unsigned k) const {
    auto it = entries_.find({p, k});
    if (it == entries_.end()) {
        throw std::invalid_argument("no default modulus for GF(" + std::to_string(p) + "^" + std::to_string(k) + ")");
    }
    return it->second;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible_mod_p(unsigned p, std::span<const unsigned> poly) {
    const std::size_t k = poly.size() - 1;
    if (k == 0) return false;
    if (k == 1) return true;
    for (std::size_t d = 1; d <= k / 2; ++d) {
        // Enumerate the p^d monic divisors of degree d by their low coefficients.
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        std::vector<unsigned> divisor(d + 1, 0);
        divisor[d] = 1;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < d; ++i) {
                divisor[i] = static_cast<unsigned>(t % p);
                t /= p;
            }
            auto rem = poly_mod_p(std::vector<unsigned>(poly.begin(), poly.end()), divisor, p);
            if (all_zero(rem)) return false;
        }
    }
    return true;
}

FieldSpec default_spec(unsigned p, unsigned k, const ModuliTable& table) {
    return FieldSpec{p, k, table.at(p, k)};
}

FieldPtr build_field(unsigned p, unsigned k, std::optional<std::vector<unsigned>> modulus, const ModuliTable& table) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw std::invalid_argument("extension degree must be positive");
    FieldSpec spec{p, k, modulus ? std::move(*modulus) : table.at(p, k)};
    return std::make_shared<const Field>(std::move(spec));
}

FieldPtr build_field(const FieldSpec& spec) { return build_field(spec.p, spec.k, spec.modulus); }

Field::Field(FieldSpec spec) : spec_(std::move(spec)), p_(spec_.p), k_(spec_.k) {
    if (!is_prime(p_)) throw std::invalid_argument("field characteristic " + std::to_string(p_) + " is not prime");
    if (k_ == 0) throw std::invalid_argument("extension degree must be positive");
    if (spec_.modulus.size() != k_ + 1) {
        throw std::invalid_argument("modulus must have exactly k+1 = " + std::to_string(k_ + 1) + " coefficients");
    }
    for (unsigned c : spec_.modulus)
        if (c >= p_) throw std::invalid_argument("modulus coefficient out of range [0, p)");
    if (spec_.modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k_; ++i) {
        q *= p_;
        if (q > (1u << 16)) throw std::invalid_argument("field size exceeds 2^16");
    }
    q_ = static_cast<std::uint32_t>(q);
    if (!is_irreducible_mod_p(p_, spec_.modulus)) throw std::invalid_argument("modulus is reducible over GF(p)");

    neg_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
        std::uint32_t t = a, r = 0, place = 1;
        for (unsigned i = 0; i < k_; ++i) {
            r += ((p_ - t % p_) % p_) * place;
            t /= p_;
            place *= p_;
        }
        neg_[a] = r;
    }

    // Search for a primitive element; the modulus need not be primitive.
    const std::uint32_t n = q_ - 1;
    std::uint32_t gen = 0;
    for (std::uint32_t cand = (q_ == 2 ? 1 : 2); cand < q_ && gen == 0; ++cand) {
        std::uint32_t x = cand;
        std::uint32_t order = 1;
        while (x != 1 && order <= n) {
            x = slow_mul(x, cand);
            ++order;
        }
        if (order == n) gen = cand;
    }
    if (gen == 0) throw std::logic_error("no primitive element found");

    exp_.assign(2 * static_cast<std::size_t>(n) + 1, 0);
    log_.assign(q_, kNoLog);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = slow_mul(x, gen);
    }
    for (std::uint32_t i = n; i < exp_.size(); ++i) exp_[i] = exp_[i - n];

    if (p_ != 2) {
        zech_.assign(n, kNoLog);
        for (std::uint32_t i = 0; i < n; ++i) {
            std::uint32_t e = exp_[i];
            std::uint32_t d0 = e % p_;
            std::uint32_t e1 = e - d0 + (d0 + 1) % p_;
            zech_[i] = e1 == 0 ? kNoLog : log_[e1];
        }
    }
}

std::uint32_t Field::slow_mul(std::uint32_t a, std::uint32_t b) const {
    std::vector<unsigned> da(k_), db(k_);
    for (unsigned i = 0; i < k_; ++i) {
        da[i] = a % p_;
        a /= p_;
        db[i] = b % p_;
        b /= p_;
    }
    std::vector<unsigned> prod(2 * k_ - 1, 0);
    for (unsigned i = 0; i < k_; ++i)
        for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    auto r = poly_mod_p(std::move(prod), spec_.modulus, p_);
    std::uint32_t out = 0, place = 1;
    for (unsigned i = 0; i < r.size(); ++i) {
        out += r[i] * place;
        place *= p_;
    }
    return out;
}

std::uint64_t Field::modulus_hash() const {
    std::string text = std::to_string(p_) + " " + std::to_string(k_);
    for (unsigned c : spec_.modulus) text += " " + std::to_string(c);
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

Elem Field::from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
}

Elem Field::from_enc(std::uint32_t enc) const {
    if (enc >= q_) throw std::out_of_range("encoding " + std::to_string(enc) + " outside field of size " + std::to_string(q_));
    return {enc};
}

Elem Field::from_coeffs(std::span<const unsigned> coeffs) const {
    if (coeffs.size() != k_) throw std::invalid_argument("element needs exactly k coefficients");
    std::uint32_t out = 0, place = 1;
    for (unsigned c : coeffs) {
        if (c >= p_) throw std::invalid_argument("coefficient out of range [0, p)");
        out += c * place;
        place *= p_;
    }
    return {out};
}

std::vector<unsigned> Field::coeffs(Elem a) const {
    std::vector<unsigned> out(k_);
    std::uint32_t t = a.v;
    for (unsigned i = 0; i < k_; ++i) {
        out[i] = t % p_;
        t /= p_;
    }
    return out;
}

Elem Field::inv(Elem a) const {
    if (a.v == 0) throw std::domain_error("inverse of zero");
    std::uint32_t l = log_[a.v];
    return {exp_[l == 0 ? 0 : (q_ - 1) - l]};
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    Elem result = one();
    Elem base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::uint32_t Field::log(Elem a) const {
    if (a.v == 0) throw std::domain_error("logarithm of zero");
    return log_[a.v];
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out(q_);
    for (std::uint32_t i = 0; i < q_; ++i) out[i] = Elem{i};
    return out;
}

FieldValue::FieldValue(FieldPtr field, Elem e) : field_(std::move(field)), e_(e) {
    if (!field_) throw std::invalid_argument("null field");
    if (!field_->contains(e)) throw std::out_of_range("element outside its field");
}

const Field& FieldValue::same(const FieldValue& o) const {
    if (field_ != o.field_ && !(field_->spec() == o.field_->spec())) {
        throw std::invalid_argument("cross-field operation");
    }
    return *field_;
}

FieldValue FieldValue::operator+(const FieldValue& o) const { return {field_, same(o).add(e_, o.e_)}; }
FieldValue FieldValue::operator-(const FieldValue& o) const { return {field_, same(o).sub(e_, o.e_)}; }
FieldValue FieldValue::operator*(const FieldValue& o) const { return {field_, same(o).mul(e_, o.e_)}; }
FieldValue FieldValue::operator/(const FieldValue& o) const { return {field_, same(o).div(e_, o.e_)}; }
FieldValue FieldValue::operator-() const { return {field_, field_->neg(e_)}; }
FieldValue FieldValue::inverse() const { return {field_, field_->inv(e_)}; }
FieldValue FieldValue::pow(std::uint64_t e) const { return {field_, field_->pow(e_, e)}; }
bool FieldValue::operator==(const FieldValue& o) const {
    same(o);
    return e_ == o.e_;
}

}  // namespace agqc
