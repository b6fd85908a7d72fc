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

// Random generators and brute-force oracles shared by the test programs.
// The oracles work on plain integer vectors and never call the factorizer.

#ifndef RECIP_TESTS_SUPPORT_HPP
#define RECIP_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "recip/recip.hpp"

namespace oracle {

using Vec = std::vector<std::int64_t>;  // coefficients mod p, lowest first

inline std::int64_t md(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline std::int64_t pw(std::int64_t b, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    b = md(b, p);
    for (std::int64_t i = 0; i < e; ++i) r = r * b % p;
    return r;
}

inline std::int64_t inv(std::int64_t a, std::int64_t p) {
    a = md(a, p);
    for (std::int64_t x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    return 0;
}

inline void trim(Vec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Vec mul(const Vec& a, const Vec& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
}

/// Remainder of a by b (b nonzero).
inline Vec rem(Vec a, const Vec& b, std::int64_t p) {
    const std::int64_t li = inv(b.back(), p);
    while (a.size() >= b.size()) {
        const std::int64_t c = a.back() * li % p;
        const std::size_t s = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[s + i] = md(a[s + i] - c * b[i], p);
        trim(a);
    }
    return a;
}

inline std::pair<Vec, Vec> divrem(Vec a, const Vec& b, std::int64_t p) {
    const std::int64_t li = inv(b.back(), p);
    Vec q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (a.size() >= b.size() && !a.empty()) {
        const std::int64_t c = a.back() * li % p;
        const std::size_t s = a.size() - b.size();
        q[s] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[s + i] = md(a[s + i] - c * b[i], p);
        trim(a);
    }
    trim(q);
    return {q, a};
}

/// Number of times b divides a, and the cofactor.
inline std::pair<long, Vec> strip(Vec a, const Vec& b, std::int64_t p) {
    long k = 0;
    for (;;) {
        auto [q, r] = divrem(a, b, p);
        if (!r.empty()) return {k, a};
        a = q;
        ++k;
    }
}

inline bool has_root(const Vec& a, std::int64_t p) {
    for (std::int64_t x = 0; x < p; ++x) {
        std::int64_t acc = 0;
        for (std::size_t i = a.size(); i-- > 0;) acc = (acc * x + a[i]) % p;
        if (acc == 0) return true;
    }
    return false;
}

/// All monic polynomials of degree d in lexicographic order, c0 most significant.
inline std::vector<Vec> monics(std::int64_t p, int d) {
    std::vector<Vec> out;
    std::int64_t total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (std::int64_t idx = 0; idx < total; ++idx) {
        Vec c(static_cast<std::size_t>(d) + 1, 0);
        c[static_cast<std::size_t>(d)] = 1;
        std::int64_t x = idx;
        for (int i = d - 1; i >= 0; --i) {
            c[static_cast<std::size_t>(i)] = x % p;
            x /= p;
        }
        out.push_back(c);
    }
    return out;
}

/// Irreducibility by trial division by every monic of degree <= d/2.
inline bool irreducible(const Vec& a, std::int64_t p) {
    const int d = static_cast<int>(a.size()) - 1;
    if (d < 1) return false;
    for (int e = 1; 2 * e <= d; ++e)
        for (const auto& m : monics(p, e))
            if (rem(a, m, p).empty()) return false;
    return true;
}

/// Factorization by trial division with every monic irreducible up to the degree.
inline std::vector<std::pair<Vec, long>> trial_factor(Vec a, std::int64_t p) {
    std::vector<std::pair<Vec, long>> out;
    const std::int64_t li = inv(a.back(), p);
    for (auto& c : a) c = c * li % p;
    for (int e = 1; static_cast<int>(a.size()) - 1 >= e; ++e) {
        for (const auto& m : monics(p, e)) {
            if (!irreducible(m, p)) continue;
            auto [k, rest] = strip(a, m, p);
            if (k > 0) {
                out.emplace_back(m, k);
                a = rest;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Arithmetic in F_p[x]/(m) on vectors, for norms and residues.
struct Ext {
    std::int64_t p;
    Vec m;
    Vec mulm(const Vec& a, const Vec& b) const { return rem(mul(a, b), m, p); }
    Vec mul(const Vec& a, const Vec& b) const { return oracle::mul(a, b, p); }
    Vec powm(Vec a, std::uint64_t e) const {
        Vec r{1};
        while (e) {
            if (e & 1) r = mulm(r, a);
            a = mulm(a, a);
            e >>= 1;
        }
        return r;
    }
    /// Inverse as a^(q-2) with q = p^d.
    Vec invm(const Vec& a) const {
        std::uint64_t q = 1;
        for (std::size_t i = 1; i < m.size(); ++i) q *= static_cast<std::uint64_t>(p);
        return powm(a, q - 2);
    }
    /// Product of the Frobenius conjugates a * a^p * ... * a^{p^{d-1}}.
    std::int64_t norm(const Vec& a) const {
        const std::size_t d = m.size() - 1;
        Vec acc{1};
        Vec conj = a;
        for (std::size_t i = 0; i < d; ++i) {
            acc = mulm(acc, conj);
            conj = powm(conj, static_cast<std::uint64_t>(p));
        }
        return acc.empty() ? 0 : acc[0];
    }
};

/// Rank of a dense matrix mod p by plain Gaussian elimination.
inline std::size_t rank(std::vector<Vec> rows, std::int64_t p) {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && md(rows[piv][c], p) == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const std::int64_t iv = inv(rows[r][c], p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            const std::int64_t f = md(rows[i][c], p) * iv % p;
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] = md(rows[i][j] - f * rows[r][j], p);
        }
        ++r;
    }
    return r;
}

/// Quotient dimensions of V+ against sigma V+ computed on the truncation
/// span(e_1..e_N), N >= n0, from columns of the padded matrix.
inline std::pair<long, long> truncated_quotient_dims(const recip::BlockOperator& s, const recip::MonomialSubspace& v,
                                                     std::size_t extra) {
    const std::size_t n = s.n0() + extra;
    const auto big = s.padded(n);
    const auto p = static_cast<std::int64_t>(s.field().characteristic());
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < n; ++j)
        if (v.contains(static_cast<long>(j) + 1)) idx.push_back(j);
    // rows of the transposed [E | S E] matrix: each basis vector is one row
    std::vector<Vec> e_rows, s_rows;
    for (std::size_t j : idx) {
        Vec e(n, 0), c(n, 0);
        e[j] = 1;
        for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<std::int64_t>(big.matrix()(i, j).value());
        e_rows.push_back(e);
        s_rows.push_back(c);
    }
    std::vector<Vec> all = e_rows;
    all.insert(all.end(), s_rows.begin(), s_rows.end());
    const long a = static_cast<long>(rank(e_rows, p));
    const long b = static_cast<long>(rank(s_rows, p));
    const long meet = a + b - static_cast<long>(rank(all, p));
    return {a - meet, b - meet};
}

inline Vec to_vec(const recip::Polynomial& f) {
    Vec v;
    for (const auto& c : f.coeffs()) v.push_back(static_cast<std::int64_t>(c.value()));
    return v;
}

inline recip::Polynomial to_poly(const recip::Field& k, const Vec& v) { return recip::Polynomial::from_ints(k, v); }

/// A nonzero rational function as an unfactored pair.
struct Frac {
    Vec num;
    Vec den;
};

inline Frac to_frac(const recip::RationalFunction& f) { return {to_vec(f.numerator()), to_vec(f.denominator())}; }

/// Valuation at a monic irreducible P by repeated division.
inline long valuation(const Frac& f, const Vec& P, std::int64_t p) {
    return strip(f.num, P, p).first - strip(f.den, P, p).first;
}

inline long valuation_inf(const Frac& f) {
    return static_cast<long>(f.den.size()) - static_cast<long>(f.num.size());
}

/// Tame symbol at the finite point P computed from unfactored data.
inline std::int64_t tame(const Frac& f, const Frac& g, const Vec& P, std::int64_t p) {
    const Ext k{p, P};
    auto unit_value = [&](const Frac& h, long& v) {
        auto [a, na] = strip(h.num, P, p);
        auto [b, nb] = strip(h.den, P, p);
        v = a - b;
        return k.mulm(rem(na, P, p), k.invm(rem(nb, P, p)));
    };
    long vf = 0, vg = 0;
    const Vec uf = unit_value(f, vf);
    const Vec ug = unit_value(g, vg);
    // f^{vg}/g^{vf} = uf^{vg}/ug^{vf}; the P-powers cancel
    auto power = [&](const Vec& u, long e) { return e >= 0 ? k.powm(u, e) : k.powm(k.invm(u), -e); };
    const Vec val = k.mulm(power(uf, vg), power(k.invm(ug), vf));
    std::int64_t n = k.norm(val);
    const long deg = static_cast<long>(P.size()) - 1;
    if ((deg * vf * vg) % 2 != 0) n = md(-n, p);
    return n;
}

/// Tame symbol at infinity from leading coefficients.
inline std::int64_t tame_inf(const Frac& f, const Frac& g, std::int64_t p) {
    const long vf = valuation_inf(f), vg = valuation_inf(g);
    const std::int64_t lf = f.num.back() * inv(f.den.back(), p) % p;
    const std::int64_t lg = g.num.back() * inv(g.den.back(), p) % p;
    auto power = [&](std::int64_t u, long e) { return e >= 0 ? pw(u, e, p) : pw(inv(u, p), -e, p); };
    std::int64_t n = power(lf, vg) * power(inv(lg, p), vf) % p;
    if ((vf * vg) % 2 != 0) n = md(-n, p);
    return n;
}

/// Leading Laurent coefficient at t = 0.
inline std::pair<long, std::int64_t> laurent_lead(const Frac& f, std::int64_t p) {
    long a = 0, b = 0;
    while (f.num[static_cast<std::size_t>(a)] == 0) ++a;
    while (f.den[static_cast<std::size_t>(b)] == 0) ++b;
    return {a - b, f.num[static_cast<std::size_t>(a)] * inv(f.den[static_cast<std::size_t>(b)], p) % p};
}

/// The closed form c_f^{v(g)} / c_g^{v(f)} at t = 0.
inline std::int64_t commutator_at_zero(const Frac& f, const Frac& g, std::int64_t p) {
    const auto [vf, cf] = laurent_lead(f, p);
    const auto [vg, cg] = laurent_lead(g, p);
    auto power = [&](std::int64_t u, long e) { return e >= 0 ? pw(u, e, p) : pw(inv(u, p), -e, p); };
    return power(cf, vg) * power(inv(cg, p), vf) % p;
}

}  // namespace oracle

namespace gen {

inline recip::Polynomial nonzero_poly(const recip::Field& k, int max_deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    for (;;) {
        auto f = recip::detail::random_polynomial(k, static_cast<std::size_t>(dd(rng)) + 1, rng);
        if (!f.is_zero()) return f;
    }
}

inline recip::RationalFunction rational(const recip::Field& k, int max_deg, std::mt19937_64& rng) {
    return recip::RationalFunction::normalize(nonzero_poly(k, max_deg, rng), nonzero_poly(k, max_deg, rng));
}

/// t^v * u with u a unit at t = 0 of degree <= max_deg.
inline recip::RationalFunction with_valuation(const recip::Field& k, long v, int max_deg, std::mt19937_64& rng) {
    auto unit = [&] {
        for (;;) {
            auto f = nonzero_poly(k, max_deg, rng);
            if (!f.coeff(0).is_zero()) return f;
        }
    };
    return recip::RationalFunction::normalize(unit(), unit()) * recip::RationalFunction::t(k).pow(v);
}

inline std::uint64_t pick(const std::vector<std::uint64_t>& v, std::mt19937_64& rng) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

inline recip::BlockOperator block(const recip::Field& k, std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        recip::Matrix m(k, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = recip::detail::random_element(k, rng);
        if (m.is_invertible()) return recip::BlockOperator(m);
    }
}

/// Permutation times an invertible diagonal.
inline recip::BlockOperator monomial_block(const recip::Field& k, std::size_t n, std::mt19937_64& rng) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    recip::Matrix m(k, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        recip::Element c = k.zero();
        while (c.is_zero()) c = recip::detail::random_element(k, rng);
        m(perm[j], j) = c;
    }
    return recip::BlockOperator(m);
}

}  // namespace gen

#endif  // RECIP_TESTS_SUPPORT_HPP
