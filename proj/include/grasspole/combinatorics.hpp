/*
   Copyright 2026 The grasspole Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GRASSPOLE_COMBINATORICS_HPP
#define GRASSPOLE_COMBINATORICS_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace grasspole {

inline std::size_t choose(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/**
 * Strictly increasing column tuple drawn from {0, ..., N-1}. Column indices are 0-based in code;
 * serialized forms (JSON, text) print them 1-based.
 */
class MultiIndex {
   public:
    MultiIndex() = default;

    MultiIndex(std::vector<std::size_t> cols, std::size_t ambient) : cols_(std::move(cols)), ambient_(ambient) {
        for (std::size_t i = 0; i < cols_.size(); ++i) {
            if (cols_[i] >= ambient_ || (i > 0 && cols_[i] <= cols_[i - 1])) {
                fail(ErrorCode::InvalidArgument, "multi-index must be strictly increasing within the ambient range");
            }
        }
    }

    const std::vector<std::size_t>& columns() const noexcept { return cols_; }
    std::size_t size() const noexcept { return cols_.size(); }
    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t operator[](std::size_t i) const { return cols_[i]; }

    /// Position in the lex enumeration of all size()-subsets of {0..N-1}.
    std::size_t rank() const {
        std::size_t r = 0;
        std::size_t next = 0;
        const std::size_t k = cols_.size();
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t v = next; v < cols_[i]; ++v) r += choose(ambient_ - 1 - v, k - 1 - i);
            next = cols_[i] + 1;
        }
        return r;
    }

    MultiIndex complement() const {
        std::vector<std::size_t> out;
        for (std::size_t j = 0, i = 0; j < ambient_; ++j) {
            if (i < cols_.size() && cols_[i] == j) {
                ++i;
            } else {
                out.push_back(j);
            }
        }
        return {std::move(out), ambient_};
    }

    /// Sum of the 1-based column labels.
    std::size_t label_sum() const {
        std::size_t s = 0;
        for (auto c : cols_) s += c + 1;
        return s;
    }

    std::vector<std::size_t> one_based() const {
        std::vector<std::size_t> out(cols_);
        for (auto& c : out) ++c;
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < cols_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(cols_[i] + 1);
        }
        return s + "}";
    }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

   private:
    std::vector<std::size_t> cols_;
    std::size_t ambient_ = 0;
};

/// All k-subsets of {0..n-1} in lex order.
inline std::vector<MultiIndex> subsets(std::size_t n, std::size_t k) {
    std::vector<MultiIndex> out;
    if (k > n) return out;
    out.reserve(choose(n, k));
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    while (true) {
        out.emplace_back(c, n);
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

/**
 * Sorts an ordered tuple of column labels. Returns the sorted multi-index and the sign of the
 * sorting permutation, or nullopt when a label repeats.
 */
inline std::optional<std::pair<MultiIndex, int>> sort_with_sign(std::vector<std::size_t> tuple, std::size_t ambient) {
    int sign = 1;
    for (std::size_t i = 1; i < tuple.size(); ++i) {
        for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
            if (tuple[j - 1] == tuple[j]) return std::nullopt;
            std::swap(tuple[j - 1], tuple[j]);
            sign = -sign;
        }
    }
    return std::make_pair(MultiIndex(std::move(tuple), ambient), sign);
}

/// Sign (-1)^{m(m+1)/2 + sum of 1-based labels of beta} of the Laplace expansion along the top m rows.
inline int laplace_sign(const MultiIndex& beta) {
    const std::size_t m = beta.size();
    return ((m * (m + 1) / 2 + beta.label_sum()) % 2 == 0) ? 1 : -1;
}

}  // namespace grasspole

#endif  // GRASSPOLE_COMBINATORICS_HPP
