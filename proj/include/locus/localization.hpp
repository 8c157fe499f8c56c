#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "locus/errors.hpp"
#include "locus/field.hpp"
#include "locus/partition.hpp"
#include "locus/weighted_set.hpp"

namespace locus {

/// Isolated fixed points of a circle action on a 4n-manifold: per point,
/// the 2n nonzero plane rotation numbers.  The signs are trusted to be an
/// orientation-compatible choice; only even sign changes are ambiguous and
/// those leave every derived quantity unchanged.
class CircleFixedPointData {
  public:
    CircleFixedPointData(int n, std::vector<std::vector<std::int64_t>> points)
        : n_(n), points_(std::move(points)) {
        if (n_ < 1) throw InputError("circle data needs n >= 1");
        if (points_.empty()) throw InputError("circle data needs at least one fixed point");
        for (const auto& ks : points_) {
            if (ks.size() != static_cast<std::size_t>(2 * n_))
                throw DimensionMismatchError("each fixed point needs exactly 2n rotation numbers");
            for (std::int64_t k : ks)
                if (k == 0) throw ZeroRotationNumberError("rotation numbers must be nonzero");
        }
    }

    int n() const { return n_; }
    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<std::vector<std::int64_t>>& points() const { return points_; }

  private:
    int n_;
    std::vector<std::vector<std::int64_t>> points_;
};

struct ZpFixedPoint {
    std::vector<std::int64_t> weights;  // residues in 1..p-1
    int epsilon = +1;                   // orientation sign
};

/// Isolated fixed points of a Z_p action on a 2n-dimensional unitary
/// manifold: per point, n tangent weights in Z_p - {0} and the sign
/// epsilon comparing the two orientations.
class ZpFixedPointData {
  public:
    ZpFixedPointData(std::int64_t p, int n, std::vector<ZpFixedPoint> points)
        : desc_(FieldDescriptor::prime_field(p)), n_(n), points_(std::move(points)) {
        if (n_ < 1) throw InputError("Z_p data needs n >= 1");
        if (points_.empty()) throw InputError("Z_p data needs at least one fixed point");
        for (const ZpFixedPoint& pt : points_) {
            if (pt.weights.size() != static_cast<std::size_t>(n_))
                throw DimensionMismatchError("each fixed point needs exactly n weights");
            for (std::int64_t k : pt.weights) {
                if (k % p == 0)
                    throw ZeroWeightError("weights must be nonzero mod p");
                if (k < 1 || k >= p)
                    throw InputError("weights must be residues in 1..p-1");
            }
            if (pt.epsilon != 1 && pt.epsilon != -1)
                throw InputError("epsilon must be +1 or -1");
        }
    }

    std::int64_t p() const { return desc_.modulus(); }
    const FieldDescriptor& descriptor() const { return desc_; }
    int n() const { return n_; }
    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<ZpFixedPoint>& points() const { return points_; }

  private:
    FieldDescriptor desc_;
    int n_;
    std::vector<ZpFixedPoint> points_;
};

enum class NumberKind { Pontrjagin, Chern };

inline std::string to_string(NumberKind kind) {
    return kind == NumberKind::Pontrjagin ? "pontrjagin" : "chern";
}

/// Characteristic numbers of a manifold: integer values indexed by
/// weight-n partitions.  Omitted partitions mean zero.
class CharacteristicNumbers {
  public:
    CharacteristicNumbers(NumberKind kind, int n) : kind_(kind), n_(n) {
        if (n_ < 0) throw InputError("characteristic numbers need n >= 0");
    }

    NumberKind kind() const { return kind_; }
    int n() const { return n_; }
    const std::map<Partition, BigInt>& values() const { return values_; }

    void set(const Partition& lambda, BigInt value) {
        if (lambda.ambient() != n_)
            throw DimensionMismatchError("partition ambient differs from n");
        if (lambda.weight() != n_)
            throw WeightMismatchError("characteristic numbers are indexed by weight-n partitions");
        if (value == 0)
            values_.erase(lambda);
        else
            values_[lambda] = std::move(value);
    }

    BigInt value_of(const Partition& lambda) const {
        auto it = values_.find(lambda);
        return it == values_.end() ? BigInt(0) : it->second;
    }

  private:
    NumberKind kind_;
    int n_;
    std::map<Partition, BigInt> values_;
};

enum class BoundBasis { Pontrjagin, ChernModP, Gamma };

inline std::string to_string(BoundBasis basis) {
    switch (basis) {
        case BoundBasis::Pontrjagin: return "pontrjagin";
        case BoundBasis::ChernModP: return "chern-mod-p";
        default: return "gamma";
    }
}

/// A fixed-point lower bound: bound = m(witness) + 1, or no information
/// when every relevant number vanishes.
struct BoundReport {
    std::optional<int> bound;
    std::optional<Partition> witness;
    BoundBasis basis = BoundBasis::Gamma;
};

enum class ObstructionKind { Obstructed, Consistent, Vacuous };

inline std::string to_string(ObstructionKind kind) {
    switch (kind) {
        case ObstructionKind::Obstructed: return "obstructed";
        case ObstructionKind::Consistent: return "consistent";
        default: return "vacuous";
    }
}

/// Verdict of the obstruction test p >= m + 1.
struct ObstructionVerdict {
    std::int64_t p = 0;
    std::optional<int> m;
    ObstructionKind verdict = ObstructionKind::Vacuous;
};

/// mu_i = 1 / prod k_j, a_j = e_j of the squared rotation numbers.
inline WeightedSet circle_to_weighted_set(const CircleFixedPointData& data) {
    const FieldDescriptor d = FieldDescriptor::rationals();
    std::vector<WeightedPoint> points;
    points.reserve(data.points().size());
    for (const auto& ks : data.points()) {
        BigInt product = 1;
        std::vector<FieldElement> squares;
        squares.reserve(ks.size());
        for (std::int64_t k : ks) {
            product *= k;
            squares.push_back(FieldElement::from_integer(d, BigInt(k) * k));
        }
        WeightedPoint pt;
        pt.mu = FieldElement::from_rational(1, product);
        std::vector<FieldElement> e = elementary_symmetric(d, squares, data.n());
        pt.a.assign(e.begin() + 1, e.end());
        points.push_back(std::move(pt));
    }
    return WeightedSet(d, data.n(), std::move(points));
}

/// The Bott residue sum for one partition of weight <= n.  For data coming
/// from a closed manifold this is the integer Pontrjagin number at weight n
/// and zero below; a non-integral value certifies the data is not
/// realizable, so the exact rational is returned unrounded.
inline FieldElement bott_pontrjagin(const CircleFixedPointData& data, const Partition& lambda) {
    if (lambda.weight() > data.n())
        throw WeightMismatchError("bott_pontrjagin needs weight(lambda) <= n");
    return gamma(circle_to_weighted_set(data), lambda);
}

/// mu_i = epsilon_i * (prod k_j)^{-1}, a_j = e_j of the weights, all mod p.
inline WeightedSet zp_to_weighted_set(const ZpFixedPointData& data) {
    const FieldDescriptor& d = data.descriptor();
    std::vector<WeightedPoint> points;
    points.reserve(data.points().size());
    for (const ZpFixedPoint& fp : data.points()) {
        FieldElement product = FieldElement::one(d);
        std::vector<FieldElement> values;
        values.reserve(fp.weights.size());
        for (std::int64_t k : fp.weights) {
            FieldElement v = FieldElement::from_residue(d, k);
            product = product * v;
            values.push_back(std::move(v));
        }
        WeightedPoint pt;
        pt.mu = product.inverse();
        if (fp.epsilon < 0) pt.mu = -pt.mu;
        std::vector<FieldElement> e = elementary_symmetric(d, values, data.n());
        pt.a.assign(e.begin() + 1, e.end());
        points.push_back(std::move(pt));
    }
    return WeightedSet(d, data.n(), std::move(points));
}

/// The Kosniowski sum for one partition of weight <= n: the mod-p Chern
/// number at weight n for realizable data, zero below.
inline FieldElement kosniowski_chern(const ZpFixedPointData& data, const Partition& lambda) {
    if (lambda.weight() > data.n())
        throw WeightMismatchError("kosniowski_chern needs weight(lambda) <= n");
    return gamma(zp_to_weighted_set(data), lambda);
}

namespace detail {

inline void require_data_stability(const WeightedSet& ws) {
    StabilityReport st = is_stable(ws);
    if (!st.stable)
        throw StabilityViolation(format_partition(*st.witness),
                                 "localization sums below top weight do not vanish; witness " +
                                     format_partition(*st.witness) + " gives " +
                                     format_element(*st.witness_gamma));
}

inline BoundReport bound_from_set(const WeightedSet& ws, BoundBasis basis) {
    MStatistic m = m_statistic_detail(ws);
    BoundReport report;
    report.basis = basis;
    if (m.value) {
        report.bound = *m.value + 1;
        report.witness = m.witness;
    }
    return report;
}

}  // namespace detail

/// Fixed-point lower bound from circle data: the set must be stable (the
/// realizability sanity check), then bound = m + 1 over the nonvanishing
/// Bott sums.
inline BoundReport circle_fixed_point_bound(const CircleFixedPointData& data) {
    WeightedSet ws = circle_to_weighted_set(data);
    detail::require_data_stability(ws);
    return detail::bound_from_set(ws, BoundBasis::Pontrjagin);
}

/// Fixed-point lower bound from Pontrjagin numbers.
inline BoundReport circle_fixed_point_bound(const CharacteristicNumbers& numbers) {
    if (numbers.kind() != NumberKind::Pontrjagin)
        throw KindMismatchError("circle bound needs Pontrjagin numbers");
    BoundReport report;
    report.basis = BoundBasis::Pontrjagin;
    for (const auto& [lambda, value] : numbers.values()) {
        const int m = lambda.max_multiplicity();
        if (value != 0 && (!report.bound || m + 1 > *report.bound)) {
            report.bound = m + 1;
            report.witness = lambda;
        }
    }
    return report;
}

/// Fixed-point lower bound from Z_p data.
inline BoundReport zp_fixed_point_bound(const ZpFixedPointData& data) {
    WeightedSet ws = zp_to_weighted_set(data);
    detail::require_data_stability(ws);
    return detail::bound_from_set(ws, BoundBasis::ChernModP);
}

/// Fixed-point lower bound from Chern numbers taken mod p.
inline BoundReport zp_fixed_point_bound(const CharacteristicNumbers& numbers, std::int64_t p) {
    if (numbers.kind() != NumberKind::Chern)
        throw KindMismatchError("Z_p bound needs Chern numbers");
    (void)FieldDescriptor::prime_field(p);  // validate the modulus
    BoundReport report;
    report.basis = BoundBasis::ChernModP;
    for (const auto& [lambda, value] : numbers.values()) {
        const int m = lambda.max_multiplicity();
        if (value % p != 0 && (!report.bound || m + 1 > *report.bound)) {
            report.bound = m + 1;
            report.witness = lambda;
        }
    }
    return report;
}

/// The obstruction test: a Z_p action with isolated fixed points forces
/// p >= m + 1, so p < m + 1 rules such an action out.
inline ObstructionVerdict zp_obstruction(const CharacteristicNumbers& numbers, std::int64_t p) {
    BoundReport bound = zp_fixed_point_bound(numbers, p);
    ObstructionVerdict verdict;
    verdict.p = p;
    if (!bound.bound) {
        verdict.verdict = ObstructionKind::Vacuous;
        return verdict;
    }
    verdict.m = *bound.bound - 1;
    verdict.verdict =
        p >= *bound.bound ? ObstructionKind::Consistent : ObstructionKind::Obstructed;
    return verdict;
}

struct LocalizationMismatch {
    Partition partition;
    std::string computed;
    std::string expected;
};

/// Outcome of checking localization sums against supplied characteristic
/// numbers.  Mismatches below top weight (stability failures) and at top
/// weight are reported separately; no geometric conclusion is drawn.
struct VerifyReport {
    bool ok = true;
    std::vector<LocalizationMismatch> stability_mismatches;
    std::vector<LocalizationMismatch> top_mismatches;
    std::vector<Partition> nonintegral;  // circle only
};

/// Compares every weight <= n Bott sum against the Pontrjagin numbers
/// (zero below top weight), exactly.
inline VerifyReport verify_localization(const CircleFixedPointData& data,
                                        const CharacteristicNumbers& numbers) {
    if (numbers.kind() != NumberKind::Pontrjagin)
        throw KindMismatchError("circle data verifies against Pontrjagin numbers");
    if (numbers.n() != data.n())
        throw DimensionMismatchError("dimension mismatch between data and numbers");
    WeightedSet ws = circle_to_weighted_set(data);
    VerifyReport report;
    for (const Partition& lambda : enumerate_partitions(data.n(), data.n())) {
        const FieldElement value = gamma(ws, lambda);
        const bool top = lambda.weight() == data.n();
        if (top && !value.is_integer())
            report.nonintegral.push_back(lambda);
        const BigInt expected = top ? numbers.value_of(lambda) : BigInt(0);
        if (value.rational() != BigRational(expected)) {
            auto& sink = top ? report.top_mismatches : report.stability_mismatches;
            sink.push_back({lambda, format_element(value), expected.str()});
            report.ok = false;
        }
    }
    return report;
}

/// Compares every weight <= n Kosniowski sum against the Chern numbers
/// reduced mod p (zero below top weight).
inline VerifyReport verify_localization(const ZpFixedPointData& data,
                                        const CharacteristicNumbers& numbers) {
    if (numbers.kind() != NumberKind::Chern)
        throw KindMismatchError("Z_p data verifies against Chern numbers");
    if (numbers.n() != data.n())
        throw DimensionMismatchError("dimension mismatch between data and numbers");
    WeightedSet ws = zp_to_weighted_set(data);
    const FieldDescriptor& d = data.descriptor();
    VerifyReport report;
    for (const Partition& lambda : enumerate_partitions(data.n(), data.n())) {
        const FieldElement value = gamma(ws, lambda);
        const bool top = lambda.weight() == data.n();
        const FieldElement expected =
            top ? FieldElement::from_integer(d, numbers.value_of(lambda)) : FieldElement::zero(d);
        if (!(value == expected)) {
            auto& sink = top ? report.top_mismatches : report.stability_mismatches;
            sink.push_back({lambda, format_element(value), format_element(expected)});
            report.ok = false;
        }
    }
    return report;
}

}  // namespace locus
