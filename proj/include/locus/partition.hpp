#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "locus/errors.hpp"
#include "locus/field.hpp"

namespace locus {

/// A partition with parts bounded by an ambient n, stored as the
/// multiplicity vector (m_1, ..., m_n).  Weight is sum of j * m_j.
class Partition {
  public:
    /// The empty partition: all multiplicities zero.
    explicit Partition(int n) : n_(n), mult_(static_cast<std::size_t>(n), 0) {
        if (n < 0) throw InputError("partition ambient must be non-negative");
    }

    Partition(int n, std::vector<int> multiplicities) : n_(n), mult_(std::move(multiplicities)) {
        if (n < 0) throw InputError("partition ambient must be non-negative");
        if (mult_.size() != static_cast<std::size_t>(n))
            throw InputError("multiplicity vector length must equal the ambient n");
        for (int m : mult_)
            if (m < 0) throw InputError("multiplicities must be non-negative");
    }

    int ambient() const { return n_; }
    const std::vector<int>& multiplicities() const { return mult_; }

    /// Multiplicity of the given part, 1-based.
    int multiplicity(int part) const { return mult_[static_cast<std::size_t>(part - 1)]; }

    int weight() const {
        int w = 0;
        for (int j = 1; j <= n_; ++j) w += j * multiplicity(j);
        return w;
    }

    /// m(lambda): the largest multiplicity; 0 for the empty partition.
    int max_multiplicity() const {
        int m = 0;
        for (int v : mult_) m = std::max(m, v);
        return m;
    }

    /// Smallest part index attaining m(lambda), 1-based.
    int argmax_slot() const {
        if (weight() == 0)
            throw EmptyPartitionError("argmax_slot of the empty partition");
        int m = max_multiplicity();
        for (int j = 1; j <= n_; ++j)
            if (multiplicity(j) == m) return j;
        return 0;  // unreachable
    }

    /// Sum of multiplicity vectors (same ambient).
    Partition plus(const Partition& other) const {
        if (n_ != other.n_)
            throw DimensionMismatchError("partition ambients differ");
        std::vector<int> sum(mult_);
        for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += other.mult_[j];
        return Partition(n_, std::move(sum));
    }

    /// Copy with one slot's multiplicity replaced.
    Partition with_multiplicity(int part, int value) const {
        std::vector<int> copy(mult_);
        copy[static_cast<std::size_t>(part - 1)] = value;
        return Partition(n_, std::move(copy));
    }

    friend bool operator==(const Partition&, const Partition&) = default;

    /// Canonical order: ascending weight, then lexicographic multiplicities.
    friend bool operator<(const Partition& a, const Partition& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        const int wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        return a.mult_ < b.mult_;
    }

  private:
    int n_;
    std::vector<int> mult_;
};

namespace detail {

inline void emit_partitions(int part, int remaining, std::vector<int>& mult,
                            std::vector<Partition>& out, int n) {
    if (part > n) {
        if (remaining == 0) out.emplace_back(n, mult);
        return;
    }
    for (int m = 0; m * part <= remaining; ++m) {
        mult[static_cast<std::size_t>(part - 1)] = m;
        emit_partitions(part + 1, remaining - m * part, mult, out, n);
    }
    mult[static_cast<std::size_t>(part - 1)] = 0;
}

}  // namespace detail

/// Every partition with parts <= n and weight <= w_max, in canonical order.
inline std::vector<Partition> enumerate_partitions(int n, int w_max) {
    std::vector<Partition> out;
    std::vector<int> mult(static_cast<std::size_t>(n), 0);
    for (int w = 0; w <= w_max; ++w)
        detail::emit_partitions(1, w, mult, out, n);
    std::sort(out.begin(), out.end());
    return out;
}

/// Partitions of weight exactly w with parts <= n, in canonical order.
inline std::vector<Partition> partitions_of_weight(int n, int w) {
    std::vector<Partition> out;
    std::vector<int> mult(static_cast<std::size_t>(n), 0);
    detail::emit_partitions(1, w, mult, out, n);
    std::sort(out.begin(), out.end());
    return out;
}

/// e_0, ..., e_jmax of the given values, by the one-variable-at-a-time
/// recurrence.  All inputs must live in the field d.
inline std::vector<FieldElement> elementary_symmetric(const FieldDescriptor& d,
                                                      const std::vector<FieldElement>& values,
                                                      int j_max) {
    if (j_max < 0 || static_cast<std::size_t>(j_max) > values.size())
        throw InputError("elementary_symmetric: j_max out of range");
    for (const FieldElement& v : values)
        if (v.descriptor() != d)
            throw FieldMismatchError("elementary_symmetric: value outside the field");
    std::vector<FieldElement> e(static_cast<std::size_t>(j_max) + 1, FieldElement::zero(d));
    e[0] = FieldElement::one(d);
    for (const FieldElement& v : values)
        for (int j = j_max; j >= 1; --j)
            e[static_cast<std::size_t>(j)] =
                e[static_cast<std::size_t>(j)] + e[static_cast<std::size_t>(j - 1)] * v;
    return e;
}

/// Canonical text: ascending parts, zero multiplicities omitted, "^1"
/// omitted; "()" for the empty partition.
inline std::string format_partition(const Partition& lambda) {
    std::string s;
    for (int j = 1; j <= lambda.ambient(); ++j) {
        int m = lambda.multiplicity(j);
        if (m == 0) continue;
        if (!s.empty()) s += ' ';
        s += std::to_string(j);
        if (m != 1) s += '^' + std::to_string(m);
    }
    return s.empty() ? "()" : s;
}

namespace detail {

inline int parse_small_int(const std::string& text, std::size_t& pos, const std::string& what) {
    std::size_t digits_from = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == digits_from || pos - digits_from > 9)
        throw ParseError("malformed " + what + ": '" + text + "'");
    return std::stoi(text.substr(digits_from, pos - digits_from));
}

}  // namespace detail

/// Inverse of format_partition; terms "j^m" (or "j") space-separated,
/// parts strictly ascending.
inline Partition parse_partition(const std::string& text, int n) {
    if (text == "()") return Partition(n);
    std::vector<int> mult(static_cast<std::size_t>(n), 0);
    std::size_t pos = 0;
    int last_part = 0;
    while (pos < text.size()) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos == text.size()) break;
        int part = detail::parse_small_int(text, pos, "partition");
        if (part < 1 || part > n)
            throw ParseError("partition part " + std::to_string(part) + " out of range 1.." +
                             std::to_string(n));
        if (part <= last_part)
            throw ParseError("partition parts must be strictly ascending");
        last_part = part;
        int m = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            m = detail::parse_small_int(text, pos, "partition exponent");
        }
        mult[static_cast<std::size_t>(part - 1)] = m;
        if (pos < text.size() && text[pos] != ' ')
            throw ParseError("malformed partition: '" + text + "'");
    }
    return Partition(n, std::move(mult));
}

}  // namespace locus
