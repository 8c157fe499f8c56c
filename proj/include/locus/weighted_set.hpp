#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locus/errors.hpp"
#include "locus/field.hpp"
#include "locus/linalg.hpp"
#include "locus/partition.hpp"

namespace locus {

/// One point: its coefficient mu and characteristic numbers a_1, ..., a_n.
struct WeightedPoint {
    FieldElement mu;
    std::vector<FieldElement> a;
};

/// A finite weighted set over a field: r points, each carrying n
/// characteristic numbers.  Immutable after construction.
class WeightedSet {
  public:
    WeightedSet(FieldDescriptor descriptor, int n, std::vector<WeightedPoint> points)
        : desc_(descriptor), n_(n), points_(std::move(points)) {
        if (n_ < 1) throw InputError("weighted set needs n >= 1");
        if (points_.empty()) throw InputError("weighted set needs at least one point");
        for (const WeightedPoint& pt : points_) {
            if (pt.a.size() != static_cast<std::size_t>(n_))
                throw DimensionMismatchError("point has wrong number of characteristic numbers");
            if (pt.mu.descriptor() != desc_)
                throw FieldMismatchError("coefficient outside the set's field");
            for (const FieldElement& v : pt.a)
                if (v.descriptor() != desc_)
                    throw FieldMismatchError("characteristic number outside the set's field");
        }
    }

    const FieldDescriptor& descriptor() const { return desc_; }
    int n() const { return n_; }
    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<WeightedPoint>& points() const { return points_; }

  private:
    FieldDescriptor desc_;
    int n_;
    std::vector<WeightedPoint> points_;
};

/// a_lambda for one point: the product of (a_j)^{m_j}.  Empty partition
/// gives 1.
inline FieldElement a_lambda(const WeightedPoint& point, const Partition& lambda) {
    if (lambda.ambient() != static_cast<int>(point.a.size()))
        throw DimensionMismatchError("partition ambient differs from point dimension");
    FieldElement acc = FieldElement::one(point.mu.descriptor());
    for (int j = 1; j <= lambda.ambient(); ++j) {
        const int m = lambda.multiplicity(j);
        if (m == 0) continue;
        acc = acc * point.a[static_cast<std::size_t>(j - 1)].pow(static_cast<std::uint64_t>(m));
    }
    return acc;
}

/// Gamma(lambda) = sum of mu_i * a_lambda^{(i)} over the set.
inline FieldElement gamma(const WeightedSet& ws, const Partition& lambda) {
    if (lambda.ambient() != ws.n())
        throw DimensionMismatchError("partition ambient differs from the set's n");
    FieldElement acc = FieldElement::zero(ws.descriptor());
    for (const WeightedPoint& pt : ws.points())
        acc = acc + pt.mu * a_lambda(pt, lambda);
    return acc;
}

struct StabilityReport {
    bool stable = false;
    /// First violating partition in canonical order, with its Gamma value.
    std::optional<Partition> witness;
    std::optional<FieldElement> witness_gamma;
};

/// Stable means Gamma(lambda) = 0 for every partition of weight < n.
inline StabilityReport is_stable(const WeightedSet& ws) {
    for (const Partition& lambda : enumerate_partitions(ws.n(), ws.n() - 1)) {
        FieldElement g = gamma(ws, lambda);
        if (!g.is_zero())
            return {false, lambda, g};
    }
    return {true, std::nullopt, std::nullopt};
}

namespace detail {

inline void require_vanishing_preconditions(const WeightedSet& ws, const Partition& lambda) {
    if (lambda.ambient() != ws.n())
        throw DimensionMismatchError("partition ambient differs from the set's n");
    if (lambda.weight() != ws.n())
        throw PreconditionViolation(Precondition::Weight,
                                    "partition weight must equal n = " + std::to_string(ws.n()));
    if (lambda.max_multiplicity() < ws.size())
        throw PreconditionViolation(
            Precondition::Multiplicity,
            "max multiplicity " + std::to_string(lambda.max_multiplicity()) +
                " is below the set cardinality " + std::to_string(ws.size()));
    StabilityReport st = is_stable(ws);
    if (!st.stable)
        throw PreconditionViolation(Precondition::Stability,
                                    "set is not stable; witness " +
                                        format_partition(*st.witness) + " has Gamma = " +
                                        format_element(*st.witness_gamma));
}

}  // namespace detail

/// Checks the vanishing theorem on one partition: under the preconditions
/// (stable set, weight n, m(lambda) >= r) the value must be zero.  The
/// value is recomputed, never assumed.
inline FieldElement vanishing_check(const WeightedSet& ws, const Partition& lambda) {
    detail::require_vanishing_preconditions(ws, lambda);
    FieldElement g = gamma(ws, lambda);
    if (!g.is_zero())
        throw InternalInconsistencyError(
            "Gamma(" + format_partition(lambda) + ") = " + format_element(g) +
            " is nonzero although every precondition of the vanishing theorem holds");
    return g;
}

/// The computational mirror of the vanishing proof.
struct EliminationTrace {
    int slot = 0;                           // elimination slot j*, 1-based
    std::vector<FieldElement> keys;         // distinct values s_1, ..., s_l
    std::vector<FieldElement> group_sums;   // A_1, ..., A_l by direct grouping
    std::vector<FieldElement> solved_sums;  // A_t from the exact linear solve
    FieldElement vandermonde_det;
    FieldElement gamma_value;               // sum of s_t^m * A_t
};

/// Reproduces the proof of the vanishing theorem: groups the points by
/// their slot-j* characteristic number, forms the power sums A_t, verifies
/// the Vandermonde determinant is nonzero, recovers the A_t a second time
/// by solving the stability system exactly, and checks both routes give
/// zero vectors with Gamma(lambda) = sum s_t^m A_t = 0.
inline EliminationTrace elimination_oracle(const WeightedSet& ws, const Partition& lambda) {
    detail::require_vanishing_preconditions(ws, lambda);
    const FieldDescriptor& d = ws.descriptor();

    EliminationTrace trace;
    trace.slot = lambda.argmax_slot();
    const std::size_t slot_idx = static_cast<std::size_t>(trace.slot - 1);
    const int m = lambda.max_multiplicity();

    // Group points by their slot key; A_t collects mu_i times the partial
    // product over the remaining slots.
    const Partition rest = lambda.with_multiplicity(trace.slot, 0);
    for (const WeightedPoint& pt : ws.points()) {
        const FieldElement& key = pt.a[slot_idx];
        std::size_t t = 0;
        while (t < trace.keys.size() && !(trace.keys[t] == key)) ++t;
        if (t == trace.keys.size()) {
            trace.keys.push_back(key);
            trace.group_sums.push_back(FieldElement::zero(d));
        }
        trace.group_sums[t] = trace.group_sums[t] + pt.mu * a_lambda(pt, rest);
    }
    const std::size_t l = trace.keys.size();

    trace.vandermonde_det = FieldElement::one(d);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 1; j < l; ++j)
            trace.vandermonde_det = trace.vandermonde_det * (trace.keys[j] - trace.keys[i]);
    if (trace.vandermonde_det.is_zero())
        throw InternalInconsistencyError("vanishing Vandermonde determinant over distinct keys");

    // Stability system: for 0 <= j < l, Gamma of lambda with the slot
    // multiplicity lowered to j equals sum_t s_t^j A_t.  The right-hand
    // sides are recomputed from scratch, so the solve is an independent
    // route to the A_t.
    Matrix system(l, std::vector<FieldElement>(l, FieldElement::zero(d)));
    std::vector<FieldElement> rhs(l, FieldElement::zero(d));
    for (std::size_t j = 0; j < l; ++j) {
        for (std::size_t t = 0; t < l; ++t)
            system[j][t] = trace.keys[t].pow(j);
        rhs[j] = gamma(ws, lambda.with_multiplicity(trace.slot, static_cast<int>(j)));
    }
    trace.solved_sums = solve_square(d, system, rhs);

    for (std::size_t t = 0; t < l; ++t)
        if (!(trace.solved_sums[t] == trace.group_sums[t]))
            throw InternalInconsistencyError("grouped A_t disagree with the exact linear solve");

    trace.gamma_value = FieldElement::zero(d);
    for (std::size_t t = 0; t < l; ++t)
        trace.gamma_value =
            trace.gamma_value + trace.keys[t].pow(static_cast<std::uint64_t>(m)) * trace.group_sums[t];

    if (!(trace.gamma_value == gamma(ws, lambda)))
        throw InternalInconsistencyError("grouped Gamma disagrees with the direct sum");
    for (const FieldElement& a_t : trace.group_sums)
        if (!a_t.is_zero())
            throw InternalInconsistencyError("nonzero group sum under the vanishing preconditions");

    return trace;
}

struct MStatistic {
    std::optional<int> value;           // absent: every top-weight Gamma vanishes
    std::optional<Partition> witness;   // first partition attaining the max
};

/// max of m(lambda) over weight-n partitions with Gamma(lambda) != 0.
inline MStatistic m_statistic_detail(const WeightedSet& ws) {
    MStatistic result;
    for (const Partition& lambda : partitions_of_weight(ws.n(), ws.n())) {
        if (gamma(ws, lambda).is_zero()) continue;
        const int m = lambda.max_multiplicity();
        if (!result.value || m > *result.value) {
            result.value = m;
            result.witness = lambda;
        }
    }
    return result;
}

inline std::optional<int> m_statistic(const WeightedSet& ws) {
    return m_statistic_detail(ws).value;
}

/// r >= m + 1 for any stable set realizing these Gamma values; absent when
/// the m statistic carries no information.
inline std::optional<int> lower_bound_from_gamma(const WeightedSet& ws) {
    StabilityReport st = is_stable(ws);
    if (!st.stable)
        throw PreconditionViolation(Precondition::Stability,
                                    "lower_bound_from_gamma requires a stable set; witness " +
                                        format_partition(*st.witness));
    std::optional<int> m = m_statistic(ws);
    if (!m) return std::nullopt;
    return *m + 1;
}

struct FiniteFieldCheck {
    bool consistent = false;      // p >= m + 1
    std::optional<int> m;
};

/// The finite-field corollary: a stable set over Z_p must satisfy
/// p >= m + 1, and Gamma(lambda) = 0 whenever m(lambda) >= p.
/// Inconsistent certifies that no stable weighted set over Z_p can
/// realize these values.
inline FiniteFieldCheck finite_field_bound(const WeightedSet& ws) {
    if (!ws.descriptor().is_prime_field())
        throw FieldMismatchError("finite_field_bound requires a prime-field set");
    StabilityReport st = is_stable(ws);
    if (!st.stable)
        throw PreconditionViolation(Precondition::Stability,
                                    "finite_field_bound requires a stable set; witness " +
                                        format_partition(*st.witness));
    const std::int64_t p = ws.descriptor().modulus();
    for (const Partition& lambda : partitions_of_weight(ws.n(), ws.n())) {
        if (lambda.max_multiplicity() >= p && !gamma(ws, lambda).is_zero())
            throw InternalInconsistencyError(
                "Gamma(" + format_partition(lambda) +
                ") is nonzero although m(lambda) >= |F| for this stable set");
    }
    FiniteFieldCheck check;
    check.m = m_statistic(ws);
    check.consistent = !check.m || p >= *check.m + 1;
    return check;
}

}  // namespace locus
