#pragma once

#include <cstddef>
#include <vector>

#include "selnet/rational.hpp"

namespace selnet {

// Visits every k-subset of {0,..,n-1} in lexicographic order.
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        fn(const_cast<const std::vector<std::size_t>&>(idx));
        std::size_t i = k;
        while (i-- > 0) {
            if (idx[i] != i + n - k) break;
            if (i == 0) return;
        }
        if (idx[i] == i + n - k) return;
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Partitions of {0,..,n-1} into exactly `parts` nonempty unlabeled blocks of
// size at most max_block, visited in a canonical order (each block is opened
// by the smallest element not yet assigned).
template <typename Fn>
void for_each_bounded_partition(std::size_t n, std::size_t parts, std::size_t max_block, Fn&& fn) {
    std::vector<std::vector<std::size_t>> blocks;
    auto rec = [&](auto&& self, std::size_t next) -> void {
        if (next == n) {
            if (blocks.size() == parts) fn(const_cast<const std::vector<std::vector<std::size_t>>&>(blocks));
            return;
        }
        // Remaining elements must still be able to fill all `parts` blocks.
        std::size_t remaining = n - next;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (blocks[b].size() >= max_block) continue;
            if (blocks.size() + (remaining - 1) < parts) break;
            blocks[b].push_back(next);
            self(self, next + 1);
            blocks[b].pop_back();
        }
        if (blocks.size() < parts) {
            blocks.emplace_back(1, next);
            self(self, next + 1);
            blocks.pop_back();
        }
    };
    rec(rec, 0);
}

} // namespace selnet
