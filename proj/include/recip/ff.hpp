/*
   Copyright 2026 The recip Authors

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

/**
 * @file ff.hpp
 * @brief Exact arithmetic in F_p and F_p[x]/(m(x)).
 *
 * A Field is a cheap handle (shared immutable descriptor). Prime fields have
 * degree 1; extension fields carry a monic modulus of degree d over F_p.
 * Elements are stored as d coefficients in [0, p), lowest degree first.
 *
 * Supported characteristic: 2 <= p < 2^31, so a product of two reduced
 * coefficients fits in 64 bits.
 *
 * Checked construction of extension fields (irreducibility of the modulus)
 * lives in poly.hpp, see make_extension().
 */

#ifndef RECIP_FF_HPP
#define RECIP_FF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace recip {

class FieldError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline constexpr std::uint64_t max_characteristic = (std::uint64_t{1} << 31);

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

class Element;

class Field {
public:
    /// F_p. Throws FieldError unless p is a prime below 2^31.
    static Field prime(std::uint64_t p) {
        if (p >= max_characteristic || !is_prime(p)) {
            throw FieldError("characteristic must be a prime below 2^31, got " + std::to_string(p));
        }
        return Field(p, {0, 1});
    }

    /// F_p[x]/(modulus) without an irreducibility check. `modulus` is the
    /// full monic coefficient list (lowest first, leading 1 included).
    static Field extension_unchecked(std::uint64_t p, std::vector<std::uint64_t> modulus) {
        if (p >= max_characteristic || !is_prime(p)) {
            throw FieldError("characteristic must be a prime below 2^31, got " + std::to_string(p));
        }
        if (modulus.size() < 2) throw FieldError("extension modulus must have degree >= 1");
        for (auto& c : modulus) c %= p;
        if (modulus.back() != 1) throw FieldError("extension modulus must be monic");
        if (modulus.size() == 2) {
            // Degree one: F_p[x]/(x - r) is F_p itself.
            return Field(p, {0, 1});
        }
        return Field(p, std::move(modulus));
    }

    Field() = default;

    std::uint64_t characteristic() const { return impl().p; }
    std::size_t degree() const { return impl().modulus.size() - 1; }
    bool is_prime_field() const { return degree() == 1; }
    const std::vector<std::uint64_t>& modulus() const { return impl().modulus; }

    /// Number of elements p^d, if it fits in 64 bits.
    std::optional<std::uint64_t> order() const { return impl().order; }
    std::uint64_t order_checked() const {
        if (!impl().order) throw FieldError("field order exceeds 64 bits");
        return *impl().order;
    }

    Field prime_subfield() const { return is_prime_field() ? *this : Field::prime(characteristic()); }

    Element zero() const;
    Element one() const;
    Element from_int(std::int64_t v) const;
    Element from_coeffs(std::vector<std::uint64_t> coeffs) const;
    /// The class of x in F_p[x]/(m); for prime fields this is 0 since m = x.
    Element generator() const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.impl_ == b.impl_ ||
               (a.impl_ && b.impl_ && a.impl().p == b.impl().p && a.impl().modulus == b.impl().modulus);
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "F_" << characteristic();
        if (!is_prime_field()) {
            os << "[x]/(";
            bool first = true;
            for (std::size_t i = modulus().size(); i-- > 0;) {
                if (modulus()[i] == 0) continue;
                if (!first) os << " + ";
                first = false;
                if (i == 0 || modulus()[i] != 1) os << modulus()[i];
                if (i > 0) os << (i == 1 ? "x" : "x^" + std::to_string(i));
            }
            os << ")";
        }
        return os.str();
    }

private:
    struct Impl {
        std::uint64_t p = 0;
        std::vector<std::uint64_t> modulus;
        std::optional<std::uint64_t> order;
    };

    Field(std::uint64_t p, std::vector<std::uint64_t> modulus) {
        auto impl = std::make_shared<Impl>();
        impl->p = p;
        impl->modulus = std::move(modulus);
        unsigned __int128 q = 1;
        bool fits = true;
        for (std::size_t i = 0; i + 1 < impl->modulus.size(); ++i) {
            q *= p;
            if (q > UINT64_MAX) {
                fits = false;
                break;
            }
        }
        if (fits) impl->order = static_cast<std::uint64_t>(q);
        impl_ = std::move(impl);
    }

    const Impl& impl() const {
        if (!impl_) throw FieldError("use of an unset Field");
        return *impl_;
    }

    std::shared_ptr<const Impl> impl_;

    friend class Element;
};

/// An element of a Field, in canonical reduced form.
class Element {
public:
    Element() = default;

    const Field& field() const { return field_; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    bool is_zero() const {
        for (auto v : c_)
            if (v != 0) return false;
        return true;
    }
    bool is_one() const {
        if (c_.empty() || c_[0] != 1) return false;
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    /// True if the element lies in the prime subfield.
    bool in_prime_field() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    /// Value of a prime-subfield element as an integer in [0, p).
    std::uint64_t value() const {
        if (!in_prime_field()) throw FieldError("element is not in the prime subfield");
        return c_.at(0);
    }
    /// Re-home a prime-subfield element into `target` (same characteristic).
    Element cast_to(const Field& target) const {
        if (target.characteristic() != field_.characteristic())
            throw FieldError("cannot move an element between fields of different characteristic");
        return target.from_int(static_cast<std::int64_t>(value()));
    }

    friend Element operator+(const Element& a, const Element& b) {
        check_same(a, b);
        const auto p = a.p();
        Element r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            r.c_[i] += b.c_[i];
            if (r.c_[i] >= p) r.c_[i] -= p;
        }
        return r;
    }
    friend Element operator-(const Element& a, const Element& b) {
        check_same(a, b);
        const auto p = a.p();
        Element r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            r.c_[i] = r.c_[i] >= b.c_[i] ? r.c_[i] - b.c_[i] : r.c_[i] + p - b.c_[i];
        }
        return r;
    }
    Element operator-() const { return field_.zero() - *this; }

    friend Element operator*(const Element& a, const Element& b) {
        check_same(a, b);
        const auto p = a.p();
        const std::size_t d = a.c_.size();
        if (d == 1) {
            Element r = a;
            r.c_[0] = (a.c_[0] * b.c_[0]) % p;
            return r;
        }
        std::vector<std::uint64_t> prod(2 * d - 1, 0);
        for (std::size_t i = 0; i < d; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) {
                prod[i + j] = (prod[i + j] + a.c_[i] * b.c_[j]) % p;
            }
        }
        const auto& m = a.field_.modulus();
        for (std::size_t k = prod.size(); k-- > d;) {
            const auto lead = prod[k];
            if (lead == 0) continue;
            for (std::size_t i = 0; i < d; ++i) {
                // prod[k - d + i] -= lead * m[i]
                prod[k - d + i] = (prod[k - d + i] + (p - lead) * m[i]) % p;
            }
            prod[k] = 0;
        }
        prod.resize(d);
        return Element(a.field_, std::move(prod));
    }

    Element inv() const {
        if (is_zero()) throw FieldError("division by zero");
        const auto p = this->p();
        if (c_.size() == 1) return Element(field_, {pow_mod(c_[0], p - 2, p)});
        return Element(field_, poly_inverse(c_, field_.modulus(), p));
    }

    friend Element operator/(const Element& a, const Element& b) {
        check_same(a, b);
        return a * b.inv();
    }

    Element& operator+=(const Element& b) { return *this = *this + b; }
    Element& operator-=(const Element& b) { return *this = *this - b; }
    Element& operator*=(const Element& b) { return *this = *this * b; }
    Element& operator/=(const Element& b) { return *this = *this / b; }

    /// a^e; negative exponents go through inv().
    Element pow(std::int64_t e) const {
        if (e < 0) {
            // -INT64_MIN overflows; split off one factor.
            return inv().pow_u(static_cast<std::uint64_t>(-(e + 1)) + 1);
        }
        return pow_u(static_cast<std::uint64_t>(e));
    }

    Element pow_u(std::uint64_t e) const {
        Element result = field_.one();
        Element base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    /// a^p.
    Element frobenius() const { return pow_u(p()); }

    /// N_{F_{p^d}/F_p}(a) = a^{1 + p + ... + p^{d-1}}, returned in the prime field.
    Element norm() const {
        if (is_zero()) throw FieldError("norm of zero");
        Element acc = *this;
        // Horner on the exponent: acc <- acc^p * a, d - 1 times.
        for (std::size_t i = 1; i < c_.size(); ++i) acc = acc.pow_u(p()) * *this;
        if (!acc.in_prime_field()) throw std::logic_error("norm did not land in the prime field");
        return field_.prime_subfield().from_int(static_cast<std::int64_t>(acc.c_[0]));
    }

    /// a^{(q-1)/m} for a in F_q^*; the image lies in the m-th roots of unity.
    Element unity_power(std::uint64_t m) const {
        if (is_zero()) throw FieldError("unity_power of zero");
        const auto q = field_.order_checked();
        if (m == 0 || (q - 1) % m != 0) {
            throw FieldError("m = " + std::to_string(m) + " does not divide q - 1 = " + std::to_string(q - 1));
        }
        return pow_u((q - 1) / m);
    }

    friend bool operator==(const Element& a, const Element& b) { return a.field_ == b.field_ && a.c_ == b.c_; }
    /// Lexicographic on coefficients, lowest degree first.
    friend bool operator<(const Element& a, const Element& b) { return a.c_ < b.c_; }

    std::string to_string() const {
        if (c_.size() == 1) return std::to_string(c_[0]);
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!first) os << "+";
            first = false;
            if (i == 0 || c_[i] != 1) os << c_[i] << (i > 0 ? "*" : "");
            if (i > 0) os << (i == 1 ? "x" : "x^" + std::to_string(i));
        }
        if (first) os << "0";
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Element& a) { return os << a.to_string(); }

private:
    friend class Field;

    Element(Field f, std::vector<std::uint64_t> c) : field_(std::move(f)), c_(std::move(c)) {}

    std::uint64_t p() const { return field_.characteristic(); }

    static void check_same(const Element& a, const Element& b) {
        if (!(a.field_ == b.field_)) {
            throw FieldError("mismatched fields: " + a.field_.to_string() + " vs " + b.field_.to_string());
        }
    }

    static std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
        std::uint64_t r = 1 % p;
        b %= p;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    }

    // Extended Euclid in F_p[x]: inverse of a modulo m.
    static std::vector<std::uint64_t> poly_inverse(const std::vector<std::uint64_t>& a,
                                                   const std::vector<std::uint64_t>& m, std::uint64_t p) {
        using Vec = std::vector<std::uint64_t>;
        auto trim = [](Vec& v) {
            while (!v.empty() && v.back() == 0) v.pop_back();
        };
        auto sub_scaled_shift = [p](Vec& x, const Vec& y, std::uint64_t s, std::size_t shift) {
            if (x.size() < y.size() + shift) x.resize(y.size() + shift, 0);
            for (std::size_t i = 0; i < y.size(); ++i) {
                x[i + shift] = (x[i + shift] + (p - s) * y[i] % p) % p;
            }
        };
        Vec r0 = m, r1 = a, s0, s1 = {1};
        trim(r1);
        while (!r1.empty()) {
            // r0 = q*r1 + r, s0 -= q*s1, done one monomial of q at a time.
            const auto lead_inv = pow_mod(r1.back(), p - 2, p);
            while (!r0.empty() && r0.size() >= r1.size()) {
                const auto shift = r0.size() - r1.size();
                const auto s = r0.back() * lead_inv % p;
                sub_scaled_shift(r0, r1, s, shift);
                sub_scaled_shift(s0, s1, s, shift);
                trim(r0);
                trim(s0);
            }
            std::swap(r0, r1);
            std::swap(s0, s1);
        }
        // r0 is a nonzero constant since m is irreducible and a != 0 mod m.
        if (r0.size() != 1) throw FieldError("element is not invertible (modulus not irreducible?)");
        const auto c = pow_mod(r0[0], p - 2, p);
        Vec out(m.size() - 1, 0);
        for (std::size_t i = 0; i < s0.size() && i < out.size(); ++i) out[i] = s0[i] * c % p;
        return out;
    }

    Field field_;
    std::vector<std::uint64_t> c_;
};

inline Element Field::zero() const { return Element(*this, std::vector<std::uint64_t>(degree(), 0)); }

inline Element Field::one() const {
    std::vector<std::uint64_t> c(degree(), 0);
    c[0] = 1;
    return Element(*this, std::move(c));
}

inline Element Field::from_int(std::int64_t v) const {
    const auto p = static_cast<std::int64_t>(characteristic());
    std::int64_t r = v % p;
    if (r < 0) r += p;
    std::vector<std::uint64_t> c(degree(), 0);
    c[0] = static_cast<std::uint64_t>(r);
    return Element(*this, std::move(c));
}

inline Element Field::from_coeffs(std::vector<std::uint64_t> coeffs) const {
    if (coeffs.size() > degree()) throw FieldError("too many coefficients for " + to_string());
    coeffs.resize(degree(), 0);
    for (auto& c : coeffs) c %= characteristic();
    return Element(*this, std::move(coeffs));
}

inline Element Field::generator() const {
    if (is_prime_field()) return zero();
    std::vector<std::uint64_t> c(degree(), 0);
    c[1] = 1;
    return Element(*this, std::move(c));
}

}  // namespace recip

#endif  // RECIP_FF_HPP
