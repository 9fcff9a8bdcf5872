#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace mvv {

/// Integer partition: weakly decreasing positive parts. Immutable value type
/// with structural equality and a total order (by size, then reverse
/// lexicographic within a size, so natural iteration matches enumeration).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Parse the CLI/config syntax "[3,1]"; "[]" is the empty partition.
    static Partition parse(std::string_view s);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }    // |mu|
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }  // 0-based, 0 beyond l(mu)

    Partition conjugate() const;

    std::string to_string() const;  // "[3,1]"

    friend bool operator==(const Partition& x, const Partition& y) { return x.parts_ == y.parts_; }
    friend bool operator!=(const Partition& x, const Partition& y) { return !(x == y); }
    friend bool operator<(const Partition& x, const Partition& y) {
        if (x.size_ != y.size_) return x.size_ < y.size_;
        return x.parts_ > y.parts_;  // reverse lexicographic within a size
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of d in reverse lexicographic order ((d) first, (1^d) last).
std::vector<Partition> enumerate_partitions(int d);
/// All partitions of size <= d, by size then reverse lexicographic.
std::vector<Partition> partitions_up_to(int d);
/// Number of partitions of d.
long long partition_count(int d);

struct PartitionStats {
    long long kappa = 0;      // sum mu_i (mu_i - 2i + 1)
    long long n_mu = 0;       // sum (i-1) mu_i
    long long n_mu_t = 0;     // same for the conjugate
    mpz_class z_mu = 1;       // prod mu_i * |Aut(mu)|
    mpz_class aut = 1;        // |Aut(mu)|
    std::vector<int> hooks;   // hook lengths, sorted descending
    std::vector<int> contents;  // contents, sorted ascending
};

PartitionStats stats(const Partition& mu);
long long kappa_of(const Partition& mu);
mpz_class z_of(const Partition& mu);

/// The two exponent multisets (sorted ascending) of the hook/shifted-part
/// identity behind the quantum-dimension rewriting:
///   left  = {h(x)} U {mu_i - mu_j + j - i : i < j},
///   right = U_i {1, ..., mu_i - i + l(mu)}.
std::pair<std::vector<int>, std::vector<int>> hook_shift_multisets(const Partition& mu);

}  // namespace mvv
