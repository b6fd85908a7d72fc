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
 * @file poly.hpp
 * @brief Dense univariate polynomials over a finite Field and their
 * factorization into monic irreducibles.
 *
 * factor() runs the usual three stages:
 *  - squarefree decomposition, taking p-th roots when the derivative vanishes,
 *  - distinct-degree splitting with repeated q-power Frobenius,
 *  - equal-degree splitting (Cantor-Zassenhaus) driven by a seeded
 *    std::mt19937_64, so the output is deterministic for a given seed.
 *
 * Factors come back sorted by degree, then lexicographically on the
 * coefficient list read from the constant term up.
 */

#ifndef RECIP_POLY_HPP
#define RECIP_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ff.hpp"

namespace recip {

class PolynomialError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline constexpr std::uint64_t default_seed = 0x5eed0f7a3e5ULL;

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Field f) : field_(std::move(f)) {}
    Polynomial(Field f, std::vector<Element> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
        for (const auto& c : c_) {
            if (!(c.field() == field_)) throw FieldError("coefficient from a different field");
        }
        trim();
    }

    static Polynomial from_ints(const Field& f, const std::vector<std::int64_t>& coeffs) {
        std::vector<Element> c;
        c.reserve(coeffs.size());
        for (auto v : coeffs) c.push_back(f.from_int(v));
        return Polynomial(f, std::move(c));
    }
    static Polynomial constant(const Element& c) { return Polynomial(c.field(), {c}); }
    static Polynomial monomial(const Element& c, std::size_t k) {
        std::vector<Element> v(k + 1, c.field().zero());
        v[k] = c;
        return Polynomial(c.field(), std::move(v));
    }
    static Polynomial x(const Field& f) { return monomial(f.one(), 1); }
    static Polynomial one(const Field& f) { return constant(f.one()); }

    const Field& field() const { return field_; }
    const std::vector<Element>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Element& leading() const {
        if (c_.empty()) throw PolynomialError("leading coefficient of the zero polynomial");
        return c_.back();
    }
    Element coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    Polynomial monic() const {
        if (is_zero()) throw PolynomialError("monic part of the zero polynomial");
        if (is_monic()) return *this;
        return scale(leading().inv());
    }

    Polynomial scale(const Element& s) const {
        std::vector<Element> v = c_;
        for (auto& c : v) c *= s;
        return Polynomial(field_, std::move(v));
    }

    Polynomial derivative() const {
        std::vector<Element> v;
        for (std::size_t i = 1; i < c_.size(); ++i) {
            v.push_back(c_[i] * field_.from_int(static_cast<std::int64_t>(i % field_.characteristic())));
        }
        return Polynomial(field_, std::move(v));
    }

    Element evaluate(const Element& at) const {
        Element acc = field_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
        return acc;
    }

    /// Horner evaluation at an element of another field of the same
    /// characteristic; coefficients must lie in the prime subfield.
    Element evaluate_in(const Element& at) const {
        const Field& target = at.field();
        Element acc = target.zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i].cast_to(target);
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        check_same(a, b);
        std::vector<Element> v(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
        return Polynomial(a.field_, std::move(v));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        check_same(a, b);
        std::vector<Element> v(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
        return Polynomial(a.field_, std::move(v));
    }
    Polynomial operator-() const { return Polynomial(field_) - *this; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_same(a, b);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
        std::vector<Element> v(a.c_.size() + b.c_.size() - 1, a.field_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(a.field_, std::move(v));
    }

    /// (q, r) with a = q*b + r and deg r < deg b.
    friend std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
        check_same(a, b);
        if (b.is_zero()) throw PolynomialError("division by the zero polynomial");
        if (a.degree() < b.degree()) return {Polynomial(a.field_), a};
        const Element lead_inv = b.leading().inv();
        std::vector<Element> r = a.c_;
        std::vector<Element> q(a.c_.size() - b.c_.size() + 1, a.field_.zero());
        const std::size_t db = b.c_.size() - 1;
        for (std::size_t k = r.size(); k-- > db;) {
            if (r[k].is_zero()) continue;
            const Element s = r[k] * lead_inv;
            q[k - db] = s;
            for (std::size_t i = 0; i <= db; ++i) r[k - db + i] -= s * b.c_[i];
        }
        r.resize(db);
        return {Polynomial(a.field_, std::move(q)), Polynomial(a.field_, std::move(r))};
    }
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divrem(a, b).first; }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divrem(a, b).second; }

    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    Polynomial pow(std::uint64_t e) const {
        Polynomial result = one(field_);
        Polynomial base = *this;
        while (e) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    /// this^e mod m.
    Polynomial powmod(std::uint64_t e, const Polynomial& m) const {
        Polynomial result = one(field_) % m;
        Polynomial base = *this % m;
        while (e) {
            if (e & 1) result = (result * base) % m;
            e >>= 1;
            if (e) base = (base * base) % m;
        }
        return result;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.field_ == b.field_ && a.c_ == b.c_;
    }

    std::string to_string(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!first) os << "+";
            first = false;
            const bool show_coeff = i == 0 || !c_[i].is_one();
            if (show_coeff) {
                const std::string s = c_[i].to_string();
                const bool wrap = !c_[i].in_prime_field();
                os << (wrap ? "(" + s + ")" : s);
                if (i > 0) os << "*";
            }
            if (i > 0) os << var << (i > 1 ? "^" + std::to_string(i) : "");
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

private:
    static void check_same(const Polynomial& a, const Polynomial& b) {
        if (!(a.field_ == b.field_)) throw FieldError("polynomials over different fields");
    }
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    Field field_;
    std::vector<Element> c_;
};

/// Degree first, then coefficients lexicographically from the constant term up.
struct PolynomialOrder {
    bool operator()(const Polynomial& a, const Polynomial& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        const auto& x = a.coeffs();
        const auto& y = b.coeffs();
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    }
};

/// Monic gcd; gcd(0, 0) = 0.
inline Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

struct Factorization {
    Element leading;
    std::vector<std::pair<Polynomial, int>> factors;

    Polynomial expand() const {
        Polynomial acc = Polynomial::constant(leading);
        for (const auto& [g, e] : factors) acc *= g.pow(static_cast<std::uint64_t>(e));
        return acc;
    }
};

namespace detail {

inline Element pth_root(const Element& a) {
    // In F_{p^e}, the inverse of Frobenius is Frobenius^(e-1).
    const std::size_t e = a.field().degree();
    Element r = a;
    for (std::size_t i = 1; i < e; ++i) r = r.frobenius();
    return r;
}

inline Element element_by_index(const Field& f, std::uint64_t idx) {
    // Coefficient 0 is the most significant digit, which makes the index
    // order agree with the lexicographic order on coefficient lists.
    const std::uint64_t p = f.characteristic();
    std::vector<std::uint64_t> c(f.degree(), 0);
    for (std::size_t i = c.size(); i-- > 0;) {
        c[i] = idx % p;
        idx /= p;
    }
    return f.from_coeffs(std::move(c));
}

inline Element random_element(const Field& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, f.characteristic() - 1);
    std::vector<std::uint64_t> c(f.degree());
    for (auto& v : c) v = dist(rng);
    return f.from_coeffs(std::move(c));
}

inline Polynomial random_polynomial(const Field& f, std::size_t below_degree, std::mt19937_64& rng) {
    std::vector<Element> c;
    c.reserve(below_degree);
    for (std::size_t i = 0; i < below_degree; ++i) c.push_back(random_element(f, rng));
    return Polynomial(f, std::move(c));
}

}  // namespace detail

/// Squarefree decomposition of a monic polynomial: pairwise coprime
/// squarefree parts with their multiplicities.
inline std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f) {
    if (f.is_zero()) throw PolynomialError("squarefree decomposition of the zero polynomial");
    const Field& k = f.field();
    const auto p = static_cast<int>(k.characteristic());
    std::vector<std::pair<Polynomial, int>> out;
    if (f.degree() < 1) return out;

    Polynomial g = f.monic();
    Polynomial c = gcd(g, g.derivative());
    Polynomial w = g / c;
    int i = 1;
    while (!w.is_one()) {
        Polynomial y = gcd(w, c);
        Polynomial fac = w / y;
        if (fac.degree() > 0) out.emplace_back(fac, i);
        w = y;
        c = c / y;
        ++i;
    }
    if (!c.is_one()) {
        // c is a polynomial in t^p.
        std::vector<Element> root;
        for (std::size_t j = 0; j < c.coeffs().size(); j += static_cast<std::size_t>(p)) {
            root.push_back(detail::pth_root(c.coeffs()[j]));
        }
        for (auto& [h, m] : squarefree_decomposition(Polynomial(k, std::move(root)))) out.emplace_back(h, m * p);
    }
    return out;
}

/// Splits a monic squarefree polynomial into products of irreducibles of
/// equal degree: pairs (product, common degree).
inline std::vector<std::pair<Polynomial, int>> distinct_degree(const Polynomial& f) {
    const Field& k = f.field();
    const std::uint64_t q = k.order_checked();
    std::vector<std::pair<Polynomial, int>> out;
    Polynomial rest = f.monic();
    const Polynomial x = Polynomial::x(k);
    Polynomial h = x % rest;
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
        h = h.powmod(q, rest);
        Polynomial g = gcd(rest, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() > 0) out.emplace_back(rest, static_cast<int>(rest.degree()));
    return out;
}

/// Cantor-Zassenhaus: splits a monic squarefree product of irreducibles all of
/// degree d into its irreducible factors (unsorted).
inline std::vector<Polynomial> equal_degree(const Polynomial& f, int d, std::mt19937_64& rng) {
    if (f.degree() == d) return {f};
    const Field& k = f.field();
    const std::uint64_t q = k.order_checked();
    const auto n = static_cast<std::size_t>(f.degree());
    const Polynomial one = Polynomial::one(k);
    for (;;) {
        Polynomial a = detail::random_polynomial(k, n, rng);
        if (a.degree() < 1) continue;
        Polynomial g = gcd(a, f);
        if (g.degree() <= 0) {
            Polynomial b;
            if (k.characteristic() == 2) {
                // Trace map a + a^2 + ... + a^{2^{e d - 1}} with q = 2^e.
                const std::size_t steps = k.degree() * static_cast<std::size_t>(d);
                Polynomial term = a % f;
                b = term;
                for (std::size_t i = 1; i < steps; ++i) {
                    term = (term * term) % f;
                    b += term;
                }
            } else {
                // a^{(q^d - 1)/2} = (a^{1 + q + ... + q^{d-1}})^{(q - 1)/2}
                Polynomial nrm = a % f;
                for (int i = 1; i < d; ++i) nrm = (nrm.powmod(q, f) * a) % f;
                b = nrm.powmod((q - 1) / 2, f) - one;
            }
            g = gcd(b, f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            auto left = equal_degree(g, d, rng);
            auto right = equal_degree(f / g, d, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    }
}

/// Full factorization: leading coefficient and sorted (monic irreducible, multiplicity) pairs.
inline Factorization factor(const Polynomial& f, std::uint64_t seed = default_seed) {
    if (f.is_zero()) throw PolynomialError("cannot factor the zero polynomial");
    Factorization out{f.leading(), {}};
    std::mt19937_64 rng(seed);
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        for (const auto& [block, d] : distinct_degree(part)) {
            for (auto& g : equal_degree(block, d, rng)) out.factors.emplace_back(std::move(g), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return PolynomialOrder{}(a.first, b.first); });
    return out;
}

/// Ben-Or test: no factor of degree <= deg/2 divides f.
inline bool is_irreducible(const Polynomial& f) {
    if (f.is_zero()) throw PolynomialError("irreducibility of the zero polynomial");
    if (f.degree() < 1) return false;
    const Polynomial g = f.monic();
    const std::uint64_t q = g.field().order_checked();
    const Polynomial x = Polynomial::x(g.field());
    Polynomial h = x % g;
    for (long i = 1; 2 * i <= g.degree(); ++i) {
        h = h.powmod(q, g);
        if (!gcd(g, h - x).is_one()) return false;
    }
    return true;
}

/// Lexicographically smallest monic irreducible of degree d, scanning
/// (c_0, c_1, ..., c_{d-1}) with c_0 most significant.
inline Polynomial find_irreducible(const Field& k, int d) {
    if (d < 1) throw PolynomialError("degree must be at least 1");
    if (d == 1) return Polynomial::x(k);
    const std::uint64_t q = k.order_checked();
    // digits[i] indexes coefficient i; c_0 = 0 is skipped since t would divide.
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(d), 0);
    digits[0] = 1;
    for (;;) {
        std::vector<Element> c;
        c.reserve(digits.size() + 1);
        for (auto idx : digits) c.push_back(detail::element_by_index(k, idx));
        c.push_back(k.one());
        Polynomial cand(k, std::move(c));
        if (is_irreducible(cand)) return cand;
        std::size_t pos = digits.size();
        while (pos-- > 0) {
            if (++digits[pos] < q) break;
            digits[pos] = 0;
            if (pos == 0) throw std::logic_error("no irreducible polynomial found");
        }
    }
}

/// Checked F_p[x]/(m): m must be a monic irreducible over a prime field.
inline Field make_extension(const Polynomial& modulus) {
    if (!modulus.field().is_prime_field()) {
        throw FieldError("extension moduli must have coefficients in a prime field");
    }
    if (!modulus.is_monic()) throw FieldError("extension modulus must be monic");
    const auto fac = factor(modulus);
    if (fac.factors.size() != 1 || fac.factors[0].second != 1) {
        throw FieldError("modulus " + modulus.to_string("x") + " is not irreducible");
    }
    std::vector<std::uint64_t> m;
    for (const auto& c : modulus.coeffs()) m.push_back(c.value());
    return Field::extension_unchecked(modulus.field().characteristic(), std::move(m));
}

/// The residue field F_p[t]/(gen) of a monic irreducible generator, and
/// the class of t in it.
inline std::pair<Field, Element> residue_field(const Polynomial& gen) {
    Field k = Field::extension_unchecked(gen.field().characteristic(), [&] {
        std::vector<std::uint64_t> m;
        for (const auto& c : gen.coeffs()) m.push_back(c.value());
        return m;
    }());
    if (gen.degree() == 1) {
        // F_p[t]/(t + c): t maps to -c.
        return {k, -gen.coeffs()[0].cast_to(k)};
    }
    return {k, k.generator()};
}

}  // namespace recip

#endif  // RECIP_POLY_HPP
