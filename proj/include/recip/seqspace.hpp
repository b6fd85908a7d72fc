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
 * @file seqspace.hpp
 * @brief The space V = (+)_{n >= 1} <e_n>: monomial subspaces given by
 * eventually periodic index sets, commensurability, indices of finite-block
 * operators and admissible families.
 *
 * Public indices start at 1. Internally position i = n - 1 is used.
 */

#ifndef RECIP_SEQSPACE_HPP
#define RECIP_SEQSPACE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ff.hpp"
#include "linalg.hpp"

namespace recip {

class SeqSpaceError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class AdmissibilityError : public SeqSpaceError {
public:
    using SeqSpaceError::SeqSpaceError;
};

/// A subset of {1, 2, 3, ...} that is periodic from some point on.
class EventuallyPeriodicSet {
public:
    static constexpr long max_period = 1L << 20;

    EventuallyPeriodicSet() : period_(1), res_{false} {}

    static EventuallyPeriodicSet empty() { return {}; }
    static EventuallyPeriodicSet all() { return make(0, {}, 1, {true}); }

    static EventuallyPeriodicSet finite(const std::set<long>& members) {
        long top = 0;
        for (long n : members) {
            if (n < 1) throw SeqSpaceError("indices start at 1");
            top = std::max(top, n);
        }
        std::vector<bool> head(static_cast<std::size_t>(top), false);
        for (long n : members) head[static_cast<std::size_t>(n - 1)] = true;
        return make(top, std::move(head), 1, {false});
    }

    /// {n >= 1 : n = r (mod m)}.
    static EventuallyPeriodicSet residue_class(long r, long m) {
        if (m < 1 || m > max_period) throw SeqSpaceError("modulus out of range");
        std::vector<bool> res(static_cast<std::size_t>(m), false);
        // position i = n - 1 has i mod m = (r - 1) mod m
        res[static_cast<std::size_t>(((r - 1) % m + m) % m)] = true;
        return make(0, {}, m, std::move(res));
    }

    /// {start + step*j : j >= 0} intersected with {1, 2, ...}; step >= 0.
    static EventuallyPeriodicSet progression(long start, long step) {
        if (step < 0) throw SeqSpaceError("progression step must be non-negative");
        if (step == 0) return start >= 1 ? finite({start}) : empty();
        long first = start;
        if (first < 1) first += ((1 - first + step - 1) / step) * step;
        EventuallyPeriodicSet tail = residue_class(first, step);
        return tail.difference(finite_below(first));
    }

    /// Explicit data: head members n < N0, and n >= N0 belongs iff n mod period lies in residues.
    static EventuallyPeriodicSet from_parts(const std::set<long>& head, long n0, long period,
                                            const std::set<long>& residues) {
        if (n0 < 1) throw SeqSpaceError("N0 must be at least 1");
        if (period < 1 || period > max_period) throw SeqSpaceError("period out of range");
        std::vector<bool> h(static_cast<std::size_t>(n0 - 1), false);
        for (long n : head) {
            if (n < 1 || n >= n0) throw SeqSpaceError("head members must lie in [1, N0)");
            h[static_cast<std::size_t>(n - 1)] = true;
        }
        std::vector<bool> res(static_cast<std::size_t>(period), false);
        for (long r : residues) {
            if (r < 0 || r >= period) throw SeqSpaceError("residues must lie in [0, period)");
            res[static_cast<std::size_t>(((r - 1) % period + period) % period)] = true;
        }
        return make(n0 - 1, std::move(h), period, std::move(res));
    }

    bool contains(long n) const { return n >= 1 && at(n - 1); }

    long threshold() const { return static_cast<long>(head_.size()); }
    long period() const { return period_; }

    bool is_finite() const { return std::none_of(res_.begin(), res_.end(), [](bool b) { return b; }); }
    bool is_cofinite() const { return std::all_of(res_.begin(), res_.end(), [](bool b) { return b; }); }

    /// Number of members; throws if infinite.
    long size() const {
        if (!is_finite()) throw SeqSpaceError("infinite set has no finite size");
        return static_cast<long>(std::count(head_.begin(), head_.end(), true));
    }

    /// Members up to and including `bound`.
    std::vector<long> members_upto(long bound) const {
        std::vector<long> out;
        for (long n = 1; n <= bound; ++n)
            if (contains(n)) out.push_back(n);
        return out;
    }

    EventuallyPeriodicSet set_union(const EventuallyPeriodicSet& o) const {
        return combine(o, [](bool a, bool b) { return a || b; });
    }
    EventuallyPeriodicSet intersection(const EventuallyPeriodicSet& o) const {
        return combine(o, [](bool a, bool b) { return a && b; });
    }
    EventuallyPeriodicSet difference(const EventuallyPeriodicSet& o) const {
        return combine(o, [](bool a, bool b) { return a && !b; });
    }
    EventuallyPeriodicSet symmetric_difference(const EventuallyPeriodicSet& o) const {
        return combine(o, [](bool a, bool b) { return a != b; });
    }
    EventuallyPeriodicSet complement() const { return all().difference(*this); }

    /// Same tail: the symmetric difference is finite.
    bool same_tail(const EventuallyPeriodicSet& o) const { return symmetric_difference(o).is_finite(); }

    friend bool operator==(const EventuallyPeriodicSet& a, const EventuallyPeriodicSet& b) {
        return a.head_ == b.head_ && a.period_ == b.period_ && a.res_ == b.res_;
    }
    friend bool operator!=(const EventuallyPeriodicSet& a, const EventuallyPeriodicSet& b) { return !(a == b); }

    /// 1-based view of the canonical form.
    std::set<long> head_members() const {
        std::set<long> out;
        for (std::size_t i = 0; i < head_.size(); ++i)
            if (head_[i]) out.insert(static_cast<long>(i) + 1);
        return out;
    }
    long n0() const { return threshold() + 1; }
    std::set<long> residues() const {
        std::set<long> out;
        for (long r = 0; r < period_; ++r)
            if (res_[static_cast<std::size_t>(r)]) out.insert((r + 1) % period_);
        return out;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (long n : head_members()) {
            os << (first ? "" : ",") << n;
            first = false;
        }
        if (!is_finite()) {
            os << (first ? "" : "; ") << "n>=" << n0() << " with n mod " << period_ << " in {";
            bool f2 = true;
            for (long r : residues()) {
                os << (f2 ? "" : ",") << r;
                f2 = false;
            }
            os << "}";
        }
        os << "}";
        return os.str();
    }

private:
    static EventuallyPeriodicSet finite_below(long bound) {
        std::set<long> s;
        for (long n = 1; n < bound; ++n) s.insert(n);
        return finite(s);
    }

    static EventuallyPeriodicSet make(long threshold, std::vector<bool> head, long period, std::vector<bool> res) {
        EventuallyPeriodicSet s;
        s.head_ = std::move(head);
        s.head_.resize(static_cast<std::size_t>(threshold), false);
        s.period_ = period;
        s.res_ = std::move(res);
        s.canonicalize();
        return s;
    }

    bool at(long i) const {
        if (i < threshold()) return head_[static_cast<std::size_t>(i)];
        return res_[static_cast<std::size_t>(i % period_)];
    }

    template <class Op>
    EventuallyPeriodicSet combine(const EventuallyPeriodicSet& o, Op op) const {
        const long l = std::lcm(period_, o.period_);
        if (l > max_period) throw SeqSpaceError("combined period exceeds the supported bound");
        const long t = std::max(threshold(), o.threshold());
        std::vector<bool> head(static_cast<std::size_t>(t));
        for (long i = 0; i < t; ++i) head[static_cast<std::size_t>(i)] = op(at(i), o.at(i));
        std::vector<bool> res(static_cast<std::size_t>(l));
        for (long r = 0; r < l; ++r) {
            // a position >= t congruent to r mod l
            const long i = t + (((r - t) % l) + l) % l;
            res[static_cast<std::size_t>(r)] = op(at(i), o.at(i));
        }
        return make(t, std::move(head), l, std::move(res));
    }

    void canonicalize() {
        for (long d = 1; d < period_; ++d) {
            if (period_ % d != 0) continue;
            bool ok = true;
            for (long r = 0; r < period_ && ok; ++r)
                ok = res_[static_cast<std::size_t>(r)] == res_[static_cast<std::size_t>((r + d) % period_)];
            if (ok) {
                res_.resize(static_cast<std::size_t>(d));
                period_ = d;
                break;
            }
        }
        while (!head_.empty()) {
            const long i = threshold() - 1;
            if (head_.back() != res_[static_cast<std::size_t>(i % period_)]) break;
            head_.pop_back();
        }
    }

    std::vector<bool> head_;  // positions [0, threshold)
    long period_;
    std::vector<bool> res_;   // indexed by position mod period
};

/// span{e_n : n in index_set}.
class MonomialSubspace {
public:
    MonomialSubspace() = default;
    explicit MonomialSubspace(EventuallyPeriodicSet s) : set_(std::move(s)) {}

    static MonomialSubspace odds() { return MonomialSubspace(EventuallyPeriodicSet::residue_class(1, 2)); }
    static MonomialSubspace evens() { return MonomialSubspace(EventuallyPeriodicSet::residue_class(0, 2)); }
    static MonomialSubspace whole() { return MonomialSubspace(EventuallyPeriodicSet::all()); }

    const EventuallyPeriodicSet& index_set() const { return set_; }
    bool contains(long n) const { return set_.contains(n); }

    MonomialSubspace sum(const MonomialSubspace& o) const { return MonomialSubspace(set_.set_union(o.set_)); }
    MonomialSubspace meet(const MonomialSubspace& o) const { return MonomialSubspace(set_.intersection(o.set_)); }

    friend bool operator==(const MonomialSubspace& a, const MonomialSubspace& b) { return a.set_ == b.set_; }

    std::string to_string() const { return "span e_n, n in " + set_.to_string(); }

private:
    EventuallyPeriodicSet set_;
};

inline bool commensurable(const MonomialSubspace& a, const MonomialSubspace& b) {
    return a.index_set().same_tail(b.index_set());
}

/// (dim A/(A n B), dim B/(A n B)).
inline std::pair<long, long> relative_dims(const MonomialSubspace& a, const MonomialSubspace& b) {
    if (!commensurable(a, b)) throw SeqSpaceError("subspaces are not commensurable");
    return {a.index_set().difference(b.index_set()).size(), b.index_set().difference(a.index_set()).size()};
}

/// An automorphism acting by an invertible n0 x n0 matrix on e_1..e_n0 and
/// as the identity on e_n for n > n0. Column j is the image of e_{j+1}.
class BlockOperator {
public:
    BlockOperator() = default;
    explicit BlockOperator(Matrix m) : m_(std::move(m)) {
        if (!m_.is_invertible()) throw SeqSpaceError("block matrix must be invertible");
    }

    static BlockOperator identity(const Field& k, std::size_t n0) { return BlockOperator(Matrix::identity(k, n0)); }

    std::size_t n0() const { return m_.rows(); }
    const Matrix& matrix() const { return m_; }
    const Field& field() const { return m_.field(); }

    /// The same operator viewed as an n x n block, n >= n0.
    BlockOperator padded(std::size_t n) const {
        if (n < n0()) throw SeqSpaceError("cannot shrink a block");
        Matrix m = Matrix::identity(field(), n);
        for (std::size_t i = 0; i < n0(); ++i)
            for (std::size_t j = 0; j < n0(); ++j) m(i, j) = m_(i, j);
        return BlockOperator(std::move(m));
    }

    friend BlockOperator operator*(const BlockOperator& a, const BlockOperator& b) {
        const std::size_t n = std::max(a.n0(), b.n0());
        return BlockOperator(a.padded(n).m_ * b.padded(n).m_);
    }
    BlockOperator inverse() const { return BlockOperator(m_.inverse()); }

    friend bool operator==(const BlockOperator& a, const BlockOperator& b) {
        const std::size_t n = std::max(a.n0(), b.n0());
        return a.padded(n).m_ == b.padded(n).m_;
    }

    /// If every column has exactly one nonzero entry, the image of a
    /// monomial subspace is again monomial.
    std::optional<MonomialSubspace> monomial_image(const MonomialSubspace& s) const {
        std::vector<long> target(n0());
        for (std::size_t j = 0; j < n0(); ++j) {
            long hit = -1;
            for (std::size_t i = 0; i < n0(); ++i) {
                if (m_(i, j).is_zero()) continue;
                if (hit >= 0) return std::nullopt;
                hit = static_cast<long>(i);
            }
            target[j] = hit + 1;
        }
        std::set<long> moved_from, moved_to;
        for (std::size_t j = 0; j < n0(); ++j) {
            const long n = static_cast<long>(j) + 1;
            if (s.contains(n)) moved_to.insert(target[j]);
            moved_from.insert(n);
        }
        auto block = EventuallyPeriodicSet::finite(moved_from);
        auto image = s.index_set().difference(block).set_union(EventuallyPeriodicSet::finite(moved_to));
        return MonomialSubspace(image);
    }

    std::string to_string() const { return m_.to_string(); }

private:
    Matrix m_;
};

namespace detail {

/// Block coordinates of V_+ (0-based), and the matrix of their images.
inline std::vector<std::size_t> block_support(const MonomialSubspace& s, std::size_t n0) {
    std::vector<std::size_t> b;
    for (std::size_t j = 0; j < n0; ++j)
        if (s.contains(static_cast<long>(j) + 1)) b.push_back(j);
    return b;
}

inline Matrix coordinate_columns(const Field& k, std::size_t n0, const std::vector<std::size_t>& idx) {
    Matrix e(k, n0, idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c) e(idx[c], c) = k.one();
    return e;
}

}  // namespace detail

/// (dim V+/(V+ n sV+), dim sV+/(V+ n sV+)). Beyond the block both spaces
/// agree, so the computation happens on span(e_1..e_n0) by ranks.
inline std::pair<long, long> quotient_dims(const BlockOperator& s, const MonomialSubspace& v) {
    const auto b = detail::block_support(v, s.n0());
    if (b.empty()) return {0, 0};
    const Matrix e = detail::coordinate_columns(s.field(), s.n0(), b);
    const Matrix m = s.matrix().select_columns(b);
    const long nb = static_cast<long>(b.size());
    const long rank_m = static_cast<long>(m.rank());
    const long meet = nb + rank_m - static_cast<long>(e.hcat(m).rank());
    return {nb - meet, rank_m - meet};
}

inline long index(const BlockOperator& s, const MonomialSubspace& v) {
    const auto [a, b] = quotient_dims(s, v);
    return a - b;
}

/// phi(i, j) = step*j + row_coeff*i + offset for rows i = 1..r and j >= 0;
/// values below 1 are discarded.
struct AffineRule {
    long step = 1;
    long row_coeff = 1;
    long offset = 0;

    static AffineRule linear(long r) { return {r, 1, 0}; }

    long operator()(long i, long j) const { return step * j + row_coeff * i + offset; }

    EventuallyPeriodicSet row(long i) const {
        if (step < 0) throw SeqSpaceError("affine rule step must be non-negative");
        return EventuallyPeriodicSet::progression(row_coeff * i + offset, step);
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "phi(i,j) = " << step << "*j + " << row_coeff << "*i + " << offset;
        return os.str();
    }
};

/// Rejects the family unless the sum of all members is cofinite and each
/// member meets the sum of the others in a finite set.
inline void check_admissible(const std::vector<MonomialSubspace>& family) {
    if (family.empty()) throw AdmissibilityError("empty family");
    EventuallyPeriodicSet total;
    for (const auto& v : family) total = total.set_union(v.index_set());
    if (!total.is_cofinite()) {
        throw AdmissibilityError("the family does not span V up to finite dimension: missing " +
                                 total.complement().to_string());
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
        EventuallyPeriodicSet others;
        for (std::size_t j = 0; j < family.size(); ++j)
            if (j != i) others = others.set_union(family[j].index_set());
        const auto overlap = family[i].index_set().intersection(others);
        if (!overlap.is_finite()) {
            throw AdmissibilityError("V_" + std::to_string(i + 1) +
                                     " meets the sum of the others in an infinite set " + overlap.to_string());
        }
    }
}

inline std::vector<MonomialSubspace> admissible_family(const AffineRule& phi, long r) {
    if (r < 1) throw SeqSpaceError("family size must be positive");
    std::vector<MonomialSubspace> fam;
    for (long i = 1; i <= r; ++i) fam.emplace_back(phi.row(i));
    check_admissible(fam);
    return fam;
}

struct IndexAdditivityReport {
    std::vector<long> part_indices;
    long sum_index = 0;        // index over the sum of the parts
    long total = 0;            // sum of part indices
    bool admissible = false;   // the parts sum to V up to finite dimension
    bool passed = false;
};

/// Parts must be pairwise almost disjoint: each meets the sum of the others
/// in a finite set. Checks index(sum) = sum of indices, and for a family
/// spanning V up to finite dimension that this sum is 0.
inline IndexAdditivityReport index_additivity_check(const BlockOperator& s, const std::vector<MonomialSubspace>& parts) {
    if (parts.empty()) throw SeqSpaceError("no parts given");
    EventuallyPeriodicSet total;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        EventuallyPeriodicSet others;
        for (std::size_t j = 0; j < parts.size(); ++j)
            if (j != i) others = others.set_union(parts[j].index_set());
        if (!parts[i].index_set().intersection(others).is_finite())
            throw AdmissibilityError("parts are not almost disjoint");
        total = total.set_union(parts[i].index_set());
    }
    IndexAdditivityReport rep;
    for (const auto& v : parts) {
        rep.part_indices.push_back(index(s, v));
        rep.total += rep.part_indices.back();
    }
    rep.sum_index = index(s, MonomialSubspace(total));
    rep.admissible = total.is_cofinite();
    rep.passed = rep.sum_index == rep.total && (!rep.admissible || rep.total == 0);
    return rep;
}

}  // namespace recip

#endif  // RECIP_SEQSPACE_HPP
