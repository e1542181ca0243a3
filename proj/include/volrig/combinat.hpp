#ifndef VOLRIG_COMBINAT_HPP
#define VOLRIG_COMBINAT_HPP

#include <cstdint>
#include <vector>

#include "volrig/errors.hpp"

namespace volrig {

// C(n,k) in 64 bits; throws SizeLimitError on overflow.
inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        if (r > UINT64_MAX / num)
            throw SizeLimitError("binomial(" + std::to_string(n) + "," + std::to_string(k) + ") overflows");
        r = r * num / static_cast<std::uint64_t>(i);
    }
    return r;
}

// All k-subsets of {0,...,n-1} in lexicographic order.
inline std::vector<std::vector<int>> subsets_lex(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

} // namespace volrig

#endif
