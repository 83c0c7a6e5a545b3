#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace c4t {

// Exact binomial coefficient; intermediate products stay divisible at each
// step, so this is overflow-safe for the desk-scale n used here.
inline std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Visits every k-subset of {0,...,n-1} in lexicographic order as a sorted
// index vector.
template <typename Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        fn(const_cast<const std::vector<int>&>(idx));
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// Same, but over the elements of a sorted pool.
template <typename Fn>
void for_each_k_subset_of(const std::vector<int>& pool, int k, Fn&& fn) {
    std::vector<int> pick(static_cast<std::size_t>(std::max(k, 0)));
    for_each_k_subset(static_cast<int>(pool.size()), k, [&](const std::vector<int>& idx) {
        for (int i = 0; i < k; ++i)
            pick[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        fn(const_cast<const std::vector<int>&>(pick));
    });
}

inline bool contains_sorted(const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
}

inline std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// a \ b for sorted vectors.
inline std::vector<int> sorted_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool sorted_disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else return false;
    }
    return true;
}

}  // namespace c4t
