// Copyright 2026 The qreuse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace qreuse {

/// Fixed-size dynamic bitset tuned for the set algebra used by cone analysis
/// and order search (union, subset test, and "count of bits not in other").
class Bitset {
   public:
    Bitset() = default;
    explicit Bitset(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {}

    size_t size() const { return num_bits_; }

    bool test(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(size_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(size_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    size_t count() const {
        size_t n = 0;
        for (uint64_t w : words_) {
            n += std::popcount(w);
        }
        return n;
    }

    bool none() const {
        for (uint64_t w : words_) {
            if (w) {
                return false;
            }
        }
        return true;
    }

    /// Number of bits set here but not in `other`.
    size_t count_minus(const Bitset &other) const {
        size_t n = 0;
        for (size_t k = 0; k < words_.size(); k++) {
            n += std::popcount(words_[k] & ~other.words_[k]);
        }
        return n;
    }

    bool is_subset_of(const Bitset &other) const {
        for (size_t k = 0; k < words_.size(); k++) {
            if (words_[k] & ~other.words_[k]) {
                return false;
            }
        }
        return true;
    }

    bool intersects(const Bitset &other) const {
        for (size_t k = 0; k < words_.size(); k++) {
            if (words_[k] & other.words_[k]) {
                return true;
            }
        }
        return false;
    }

    Bitset &operator|=(const Bitset &other) {
        for (size_t k = 0; k < words_.size(); k++) {
            words_[k] |= other.words_[k];
        }
        return *this;
    }

    bool operator==(const Bitset &other) const = default;

    /// Calls f(i) for every set bit, ascending.
    template <typename F>
    void for_each(F &&f) const {
        for (size_t k = 0; k < words_.size(); k++) {
            uint64_t w = words_[k];
            while (w) {
                f(k * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<size_t> to_vector() const {
        std::vector<size_t> out;
        for_each([&](size_t i) { out.push_back(i); });
        return out;
    }

    size_t hash() const {
        size_t h = 0x9E3779B97F4A7C15ull;
        for (uint64_t w : words_) {
            h ^= std::hash<uint64_t>{}(w) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        }
        return h;
    }

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace qreuse
