#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "locus/errors.hpp"
#include "locus/field.hpp"
#include "locus/linalg.hpp"
#include "locus/localization.hpp"
#include "locus/partition.hpp"
#include "locus/weighted_set.hpp"

namespace locus {

/// The standard linear action on CP^n given by n+1 weights: circle mode
/// when prime is absent, Z_p mode when present.
struct LinearActionSpec {
    int n = 1;                          // complex projective dimension
    std::vector<std::int64_t> weights;  // n+1 action weights
    std::optional<std::int64_t> prime;
};

namespace detail {

inline void require_weight_count(const LinearActionSpec& spec) {
    if (spec.n < 1)
        throw InputError("CP^n needs n >= 1");
    if (spec.weights.size() != static_cast<std::size_t>(spec.n) + 1)
        throw InputError("CP^n needs exactly n+1 weights");
    for (std::int64_t w : spec.weights)
        if (w < -kMaxModulus || w > kMaxModulus)
            throw InputError("action weights must fit in 32 bits");
}

}  // namespace detail

/// Integer tangent weights {w_j - w_i : j != i} of the linear action on
/// CP^n, one vector per fixed point.  The complex data behind both
/// pipelines.
inline std::vector<std::vector<std::int64_t>> cpn_tangent_weights(const LinearActionSpec& spec) {
    detail::require_weight_count(spec);
    for (std::size_t i = 0; i < spec.weights.size(); ++i)
        for (std::size_t j = i + 1; j < spec.weights.size(); ++j)
            if (spec.weights[i] == spec.weights[j])
                throw RepeatedWeightError("action weights must be pairwise distinct");
    std::vector<std::vector<std::int64_t>> points;
    points.reserve(spec.weights.size());
    for (std::size_t i = 0; i < spec.weights.size(); ++i) {
        std::vector<std::int64_t> ks;
        ks.reserve(spec.weights.size() - 1);
        for (std::size_t j = 0; j < spec.weights.size(); ++j)
            if (j != i) ks.push_back(spec.weights[j] - spec.weights[i]);
        points.push_back(std::move(ks));
    }
    return points;
}

/// Fixed points of the linear circle action on CP^n for the Pontrjagin
/// pipeline.  The n complex tangent lines are the real planes of the
/// 4m-dimensional data, so n must be even; odd n only supports the
/// complex data of cpn_tangent_weights / cpn_zp_data.
inline CircleFixedPointData cpn_circle_data(const LinearActionSpec& spec) {
    if (spec.prime)
        throw InputError("circle data takes no prime");
    auto points = cpn_tangent_weights(spec);
    if (spec.n % 2 != 0)
        throw DimensionNotMultipleOfFourError(
            "CP^" + std::to_string(spec.n) + " has real dimension not divisible by 4; "
            "only the Z_p pipeline applies");
    return CircleFixedPointData(spec.n / 2, std::move(points));
}

/// Fixed points of the linear Z_p action on CP^n: tangent weights
/// w_j - w_i mod p, every epsilon +1.
inline ZpFixedPointData cpn_zp_data(const LinearActionSpec& spec) {
    detail::require_weight_count(spec);
    if (!spec.prime)
        throw InputError("Z_p data needs a prime");
    const std::int64_t p = FieldDescriptor::prime_field(*spec.prime).modulus();
    auto residue = [p](std::int64_t v) {
        std::int64_t r = v % p;
        return r < 0 ? r + p : r;
    };
    for (std::size_t i = 0; i < spec.weights.size(); ++i)
        for (std::size_t j = i + 1; j < spec.weights.size(); ++j)
            if (residue(spec.weights[i]) == residue(spec.weights[j]))
                throw RepeatedWeightModPError("action weights must be pairwise distinct mod p");
    std::vector<ZpFixedPoint> points;
    points.reserve(spec.weights.size());
    for (std::size_t i = 0; i < spec.weights.size(); ++i) {
        ZpFixedPoint pt;
        pt.epsilon = +1;
        for (std::size_t j = 0; j < spec.weights.size(); ++j)
            if (j != i) pt.weights.push_back(residue(spec.weights[j] - spec.weights[i]));
        points.push_back(std::move(pt));
    }
    return ZpFixedPointData(p, spec.n, std::move(points));
}

/// The integer-lift complex weighted set of the linear action, over the
/// rationals: mu_i = 1 / prod k_j, a_j = e_j of the tangent weights
/// themselves (not squared).  Its top-weight sums are the Chern numbers
/// of CP^n as integers.
inline WeightedSet cpn_rational_chern_set(const LinearActionSpec& spec) {
    const FieldDescriptor d = FieldDescriptor::rationals();
    std::vector<WeightedPoint> points;
    for (const auto& ks : cpn_tangent_weights(spec)) {
        BigInt product = 1;
        std::vector<FieldElement> values;
        for (std::int64_t k : ks) {
            product *= k;
            values.push_back(FieldElement::from_integer(d, k));
        }
        WeightedPoint pt;
        pt.mu = FieldElement::from_rational(1, product);
        std::vector<FieldElement> e = elementary_symmetric(d, values, spec.n);
        pt.a.assign(e.begin() + 1, e.end());
        points.push_back(std::move(pt));
    }
    return WeightedSet(d, spec.n, std::move(points));
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;
    }
    return acc;
}

/// c_lambda[CP^n] from the total Chern class (1+H)^{n+1}: the product of
/// binomial(n+1, j)^{m_j}.
inline BigInt cpn_chern_oracle(int n, const Partition& lambda) {
    if (lambda.weight() != n)
        throw WeightMismatchError("Chern numbers are indexed by weight-n partitions");
    BigInt acc = 1;
    for (int j = 1; j <= lambda.ambient(); ++j) {
        const int m = lambda.multiplicity(j);
        for (int rep = 0; rep < m; ++rep) acc *= binomial(n + 1, j);
    }
    return acc;
}

/// All Chern numbers of CP^n.
inline CharacteristicNumbers cpn_chern_numbers(int n) {
    CharacteristicNumbers numbers(NumberKind::Chern, n);
    for (const Partition& lambda : partitions_of_weight(n, n))
        numbers.set(lambda, cpn_chern_oracle(n, lambda));
    return numbers;
}

namespace detail {

// Splits one part occurrence k as (i, k - i) across the two factors and
// recurses; a completed assignment contributes a_value(mu) * b_value(nu)
// when the factor weights land exactly on (n_a, n_b).
inline void product_split(const std::vector<int>& parts, std::size_t idx,
                          const CharacteristicNumbers& a, const CharacteristicNumbers& b,
                          std::vector<int>& mu, std::vector<int>& nu, int wa, int wb,
                          BigInt& total) {
    if (wa > a.n() || wb > b.n()) return;
    if (idx == parts.size()) {
        if (wa == a.n() && wb == b.n())
            total += a.value_of(Partition(a.n(), mu)) * b.value_of(Partition(b.n(), nu));
        return;
    }
    const int k = parts[idx];
    for (int i = 0; i <= k; ++i) {
        const int j = k - i;
        if (i > a.n() || j > b.n()) continue;
        if (i > 0) ++mu[static_cast<std::size_t>(i - 1)];
        if (j > 0) ++nu[static_cast<std::size_t>(j - 1)];
        product_split(parts, idx + 1, a, b, mu, nu, wa + i, wb + j, total);
        if (i > 0) --mu[static_cast<std::size_t>(i - 1)];
        if (j > 0) --nu[static_cast<std::size_t>(j - 1)];
    }
}

}  // namespace detail

/// Characteristic numbers of a product manifold by the Whitney formula:
/// each class of the product splits as sum of bidegree pieces, and the
/// top-degree pairing factors through the two fundamental classes.
inline CharacteristicNumbers product_characteristic_numbers(const CharacteristicNumbers& a,
                                                            const CharacteristicNumbers& b) {
    if (a.kind() != b.kind())
        throw KindMismatchError("product needs characteristic numbers of the same kind");
    CharacteristicNumbers out(a.kind(), a.n() + b.n());
    for (const Partition& lambda : partitions_of_weight(out.n(), out.n())) {
        std::vector<int> parts;
        for (int j = 1; j <= lambda.ambient(); ++j)
            for (int rep = 0; rep < lambda.multiplicity(j); ++rep) parts.push_back(j);
        BigInt total = 0;
        std::vector<int> mu(static_cast<std::size_t>(a.n()), 0);
        std::vector<int> nu(static_cast<std::size_t>(b.n()), 0);
        detail::product_split(parts, 0, a, b, mu, nu, 0, 0, total);
        out.set(lambda, total);
    }
    return out;
}

/// Product circle action: Cartesian fixed points, concatenated rotation
/// numbers.
inline CircleFixedPointData product_circle_data(const CircleFixedPointData& a,
                                                const CircleFixedPointData& b) {
    std::vector<std::vector<std::int64_t>> points;
    points.reserve(a.points().size() * b.points().size());
    for (const auto& pa : a.points())
        for (const auto& pb : b.points()) {
            std::vector<std::int64_t> ks = pa;
            ks.insert(ks.end(), pb.begin(), pb.end());
            points.push_back(std::move(ks));
        }
    return CircleFixedPointData(a.n() + b.n(), std::move(points));
}

/// Product Z_p action: Cartesian fixed points, concatenated weights,
/// multiplied signs.
inline ZpFixedPointData product_zp_data(const ZpFixedPointData& a, const ZpFixedPointData& b) {
    if (a.p() != b.p())
        throw InputError("product Z_p data needs matching primes");
    std::vector<ZpFixedPoint> points;
    points.reserve(a.points().size() * b.points().size());
    for (const ZpFixedPoint& pa : a.points())
        for (const ZpFixedPoint& pb : b.points()) {
            ZpFixedPoint pt;
            pt.weights = pa.weights;
            pt.weights.insert(pt.weights.end(), pb.weights.begin(), pb.weights.end());
            pt.epsilon = pa.epsilon * pb.epsilon;
            points.push_back(std::move(pt));
        }
    return ZpFixedPointData(a.p(), a.n() + b.n(), std::move(points));
}

namespace detail {

/// Deterministic stream: draw(i) is the splitmix64 finalizer applied to
/// seed XOR (i+1) * golden-ratio constant.
class SeededStream {
  public:
    explicit SeededStream(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next() {
        std::uint64_t x = seed_ ^ (++index_ * 0x9E3779B97F4A7C15ull);
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }

    /// Uniform-ish draw in [lo, hi]; the tiny modulo bias is irrelevant
    /// for test-fixture generation.
    std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

  private:
    std::uint64_t seed_;
    std::uint64_t index_ = 0;
};

inline FieldElement sample_value(SeededStream& stream, const FieldDescriptor& d) {
    if (d.is_rationals())
        return FieldElement::from_integer(d, stream.next_in(-9, 9));
    return FieldElement::from_residue(d, stream.next_in(0, d.modulus() - 1));
}

inline FieldElement sample_nonzero(SeededStream& stream, const FieldDescriptor& d) {
    if (d.is_rationals()) {
        std::int64_t v = stream.next_in(1, 6);
        return FieldElement::from_integer(d, v <= 3 ? v : 3 - v);  // {1,2,3,-1,-2,-3}
    }
    return FieldElement::from_residue(d, stream.next_in(1, d.modulus() - 1));
}

}  // namespace detail

/// Draws a stable weighted set: characteristic numbers are sampled from
/// the seed, then the coefficients are taken from the exact null space of
/// the stability constraints (rows indexed by the weight < n partitions).
/// Returns nothing when 32 resamples all leave a trivial null space.
inline std::optional<WeightedSet> random_stable_set(std::uint64_t seed, int r, int n,
                                                    const FieldDescriptor& d) {
    if (r < 1) throw InputError("random_stable_set needs r >= 1");
    if (n < 1) throw InputError("random_stable_set needs n >= 1");
    detail::SeededStream stream(seed);
    const std::vector<Partition> constraints = enumerate_partitions(n, n - 1);
    constexpr int kMaxResamples = 32;  // beyond the initial draw

    for (int attempt = 0; attempt <= kMaxResamples; ++attempt) {
        std::vector<WeightedPoint> points(static_cast<std::size_t>(r));
        for (WeightedPoint& pt : points) {
            pt.mu = FieldElement::zero(d);
            pt.a.reserve(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) pt.a.push_back(detail::sample_value(stream, d));
        }

        Matrix constraint_matrix;
        constraint_matrix.reserve(constraints.size());
        for (const Partition& lambda : constraints) {
            std::vector<FieldElement> row;
            row.reserve(points.size());
            for (const WeightedPoint& pt : points) row.push_back(a_lambda(pt, lambda));
            constraint_matrix.push_back(std::move(row));
        }

        const auto basis = null_space(d, constraint_matrix, points.size());
        if (basis.empty()) continue;

        for (std::size_t k = 0; k < basis.size(); ++k) {
            // Nonzero leading coefficient keeps the combination nonzero.
            const FieldElement c = k == 0 ? detail::sample_nonzero(stream, d)
                                          : detail::sample_value(stream, d);
            for (std::size_t i = 0; i < points.size(); ++i)
                points[i].mu = points[i].mu + c * basis[k][i];
        }
        return WeightedSet(d, n, std::move(points));
    }
    return std::nullopt;
}

}  // namespace locus
