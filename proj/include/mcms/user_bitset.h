// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MCMS_USER_BITSET_H_
#define MCMS_USER_BITSET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mcms {

// Fixed-size set of user ids in [0, size). Used by the solvers' inner loops,
// where unions and marginal-gain counts dominate the running time.
class UserBitset {
 public:
  UserBitset() = default;
  explicit UserBitset(int size)
      : size_(size), words_((static_cast<size_t>(size) + 63) / 64, 0) {}

  UserBitset(int size, std::span<const int> members) : UserBitset(size) {
    for (int k : members) Set(k);
  }

  int size() const { return size_; }

  void Set(int k) { words_[k >> 6] |= uint64_t{1} << (k & 63); }
  bool Test(int k) const { return (words_[k >> 6] >> (k & 63)) & 1; }

  int Count() const {
    int n = 0;
    for (uint64_t w : words_) n += std::popcount(w);
    return n;
  }

  // |this \ covered|
  int CountNotIn(const UserBitset& covered) const {
    int n = 0;
    for (size_t i = 0; i < words_.size(); ++i) {
      n += std::popcount(words_[i] & ~covered.words_[i]);
    }
    return n;
  }

  UserBitset& operator|=(const UserBitset& other) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  friend UserBitset operator|(UserBitset a, const UserBitset& b) {
    a |= b;
    return a;
  }

  // Ascending member ids.
  std::vector<int> Members() const {
    std::vector<int> out;
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i];
      while (w != 0) {
        out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
        w &= w - 1;
      }
    }
    return out;
  }

  bool operator==(const UserBitset&) const = default;

 private:
  int size_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace mcms

#endif  // MCMS_USER_BITSET_H_
