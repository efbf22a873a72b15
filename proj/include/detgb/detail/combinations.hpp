#pragma once
// Subset enumeration shared by the minor enumerators.

#include <vector>

namespace detgb::detail {

// Visits every k-subset of `items` in lexicographic index order.
template <class T, class F>
void for_each_subset(const std::vector<T>& items, int k, F&& fn) {
    const int n = static_cast<int>(items.size());
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    std::vector<T> subset(k);
    while (true) {
        for (int i = 0; i < k; ++i) subset[i] = items[idx[i]];
        fn(subset);
        if (k == 0) return;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detgb::detail
