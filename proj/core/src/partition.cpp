#include "mvv/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mvv {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
        size_ += parts_[i];
    }
}

Partition Partition::parse(std::string_view s) {
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    };
    skip_ws();
    if (i >= s.size() || s[i] != '[') throw std::invalid_argument("Partition::parse: expected '['");
    ++i;
    std::vector<int> parts;
    skip_ws();
    if (i < s.size() && s[i] == ']') {
        ++i;
    } else {
        while (true) {
            skip_ws();
            bool any = false;
            long v = 0;
            while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
                v = v * 10 + (s[i] - '0');
                ++i;
                any = true;
                if (v > 1000000) throw std::invalid_argument("Partition::parse: part too large");
            }
            if (!any) throw std::invalid_argument("Partition::parse: expected integer part");
            parts.push_back(static_cast<int>(v));
            skip_ws();
            if (i < s.size() && s[i] == ',') {
                ++i;
                continue;
            }
            if (i < s.size() && s[i] == ']') {
                ++i;
                break;
            }
            throw std::invalid_argument("Partition::parse: expected ',' or ']'");
        }
    }
    skip_ws();
    if (i != s.size()) throw std::invalid_argument("Partition::parse: trailing characters");
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> t(parts_[0], 0);
    for (int col = 0; col < parts_[0]; ++col) {
        int count = 0;
        for (int p : parts_) {
            if (p > col) ++count;
        }
        t[col] = count;
    }
    return Partition(std::move(t));
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

std::vector<Partition> enumerate_partitions(int d) {
    if (d < 0) throw std::invalid_argument("enumerate_partitions: negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Reverse lexicographic: largest first part first.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d == 0 ? 1 : d);
    return out;
}

std::vector<Partition> partitions_up_to(int d) {
    std::vector<Partition> out;
    for (int k = 0; k <= d; ++k) {
        auto pk = enumerate_partitions(k);
        out.insert(out.end(), pk.begin(), pk.end());
    }
    return out;
}

long long partition_count(int d) { return static_cast<long long>(enumerate_partitions(d).size()); }

PartitionStats stats(const Partition& mu) {
    PartitionStats st;
    Partition t = mu.conjugate();
    const auto& p = mu.parts();
    for (size_t i = 0; i < p.size(); ++i) {
        long long row = static_cast<long long>(i) + 1;
        st.kappa += static_cast<long long>(p[i]) * (p[i] - 2 * row + 1);
        st.n_mu += (row - 1) * p[i];
    }
    for (size_t j = 0; j < t.parts().size(); ++j) {
        st.n_mu_t += static_cast<long long>(j) * t.parts()[j];
    }
    for (size_t i = 0; i < p.size(); ++i) {
        for (int j = 1; j <= p[i]; ++j) {
            int hook = p[i] + t.parts()[j - 1] - static_cast<int>(i) - j;  // mu_i + mu^t_j - i - j + 1
            st.hooks.push_back(hook);
            st.contents.push_back(j - 1 - static_cast<int>(i));  // j - i with 1-based i, j
        }
    }
    std::sort(st.hooks.rbegin(), st.hooks.rend());
    std::sort(st.contents.begin(), st.contents.end());
    mpz_class prod = 1;
    int run = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        prod *= p[i];
        ++run;
        if (i + 1 == p.size() || p[i + 1] != p[i]) {
            for (int k = 2; k <= run; ++k) st.aut *= k;
            run = 0;
        }
    }
    st.z_mu = prod * st.aut;
    return st;
}

long long kappa_of(const Partition& mu) {
    long long k = 0;
    const auto& p = mu.parts();
    for (size_t i = 0; i < p.size(); ++i) {
        long long row = static_cast<long long>(i) + 1;
        k += static_cast<long long>(p[i]) * (p[i] - 2 * row + 1);
    }
    return k;
}

mpz_class z_of(const Partition& mu) { return stats(mu).z_mu; }

std::pair<std::vector<int>, std::vector<int>> hook_shift_multisets(const Partition& mu) {
    PartitionStats st = stats(mu);
    std::vector<int> left = st.hooks;
    const auto& p = mu.parts();
    int l = mu.length();
    for (int i = 1; i <= l; ++i) {
        for (int j = i + 1; j <= l; ++j) {
            left.push_back(p[i - 1] - p[j - 1] + j - i);
        }
    }
    std::vector<int> right;
    for (int i = 1; i <= l; ++i) {
        for (int j = 1; j <= p[i - 1] - i + l; ++j) right.push_back(j);
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    return {left, right};
}

}  // namespace mvv
