#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "qrr/numeric.hpp"

namespace qrr {

/// Integer partition: a finite nonincreasing sequence of positive parts.
/// The empty partition is a first-class value.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition of(std::initializer_list<int> parts) {
        return Partition(std::vector<int>(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long weight() const;  // |lambda|

    /// 0-based row access; rows past the length read as 0.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    /// Number of parts equal to `size` (size >= 1).
    int multiplicity(int size) const;

    /// The partition (2*lambda_1, 2*lambda_2, ...).
    Partition doubled() const;

    /// Minimal q-degree of any monomial of P_lambda evaluated at
    /// x_i = q^{i-1}: sum over rows of (i-1)*lambda_i.
    long min_principal_degree() const;

    bool empty() const { return parts_.empty(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (int v : p.parts()) h = h * 1099511628211ull + static_cast<std::size_t>(v) + 1;
        return h;
    }
};

/// All partitions of `n` with every part <= max_part, in lexicographically
/// decreasing order; (n=0) yields exactly the empty partition.
std::vector<Partition> enumerate_partitions(long n, long max_part);

/// p(n) by dynamic programming.
Int partition_count(long n);
std::vector<Int> partition_count_table(long n);

/// Number of partitions of n with no part divisible by m (m >= 2).
Int m_regular_count(int m, long n);
std::vector<Int> m_regular_table(int m, long n);

}  // namespace qrr
