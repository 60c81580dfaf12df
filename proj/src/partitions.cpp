#include "qrr/partitions.hpp"

#include <sstream>
#include <stdexcept>

namespace qrr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be nonincreasing");
    }
}

long Partition::weight() const {
    long w = 0;
    for (int p : parts_) w += p;
    return w;
}

int Partition::multiplicity(int size) const {
    int m = 0;
    for (int p : parts_) m += (p == size);
    return m;
}

Partition Partition::doubled() const {
    std::vector<int> d(parts_);
    for (int& p : d) p *= 2;
    return Partition(std::move(d));
}

long Partition::min_principal_degree() const {
    long s = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += static_cast<long>(i) * parts_[i];
    return s;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

namespace {

void enumerate_rec(long n, long max_part, std::vector<int>& prefix,
                   std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (long p = std::min<long>(max_part, n); p >= 1; --p) {
        prefix.push_back(static_cast<int>(p));
        enumerate_rec(n - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(long n, long max_part) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate_rec(n, max_part, prefix, out);
    return out;
}

std::vector<Int> partition_count_table(long n) {
    if (n < 0) throw std::invalid_argument("partition_count_table: n must be >= 0");
    std::vector<Int> dp(static_cast<std::size_t>(n) + 1);
    dp[0] = 1;
    for (long t = 1; t <= n; ++t)
        for (long j = t; j <= n; ++j) dp[j] += dp[j - t];
    return dp;
}

Int partition_count(long n) { return partition_count_table(n).back(); }

std::vector<Int> m_regular_table(int m, long n) {
    if (m < 2) throw std::invalid_argument("m_regular_table: m must be >= 2");
    if (n < 0) throw std::invalid_argument("m_regular_table: n must be >= 0");
    std::vector<Int> dp(static_cast<std::size_t>(n) + 1);
    dp[0] = 1;
    for (long t = 1; t <= n; ++t) {
        if (t % m == 0) continue;
        for (long j = t; j <= n; ++j) dp[j] += dp[j - t];
    }
    return dp;
}

Int m_regular_count(int m, long n) { return m_regular_table(m, n).back(); }

}  // namespace qrr
