// Copyright 2026 The sloccdet Authors
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

#pragma once

#include <vector>

#include "slocc/errors.hpp"

namespace slocc {

/// Permutation of qubit labels {1, ..., n}.  Stored as the image list
/// image_[k-1] = pi(k); construction validates bijectivity.
class QubitPermutation {
  public:
    explicit QubitPermutation(std::vector<int> image) : image_(std::move(image)) {
      const int n = static_cast<int>(image_.size());
      if (n == 0) throw DomainError("empty permutation");
      std::vector<bool> seen(static_cast<std::size_t>(n), false);
      for (int v : image_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
          throw DomainError("permutation image is not a bijection");
        seen[static_cast<std::size_t>(v - 1)] = true;
      }
    }

    static QubitPermutation identity(int n) {
      if (n < 1) throw DomainError("permutation size must be positive");
      std::vector<int> image(static_cast<std::size_t>(n));
      for (int k = 1; k <= n; ++k) image[static_cast<std::size_t>(k - 1)] = k;
      return QubitPermutation(std::move(image));
    }

    /// The transposition (a, b); a == b yields the identity.
    static QubitPermutation transposition(int n, int a, int b) {
      if (a < 1 || a > n || b < 1 || b > n)
        throw DomainError("transposition labels out of range");
      QubitPermutation p = identity(n);
      p.image_[static_cast<std::size_t>(a - 1)] = b;
      p.image_[static_cast<std::size_t>(b - 1)] = a;
      return p;
    }

    int size() const { return static_cast<int>(image_.size()); }

    /// pi(k), labels 1-based.
    int operator()(int k) const {
      if (k < 1 || k > size()) throw DomainError("permutation argument out of range");
      return image_[static_cast<std::size_t>(k - 1)];
    }

    /// Composition (*this o inner): k |-> (*this)(inner(k)).
    QubitPermutation after(const QubitPermutation &inner) const {
      if (size() != inner.size()) throw DomainError("permutation size mismatch");
      std::vector<int> image(static_cast<std::size_t>(size()));
      for (int k = 1; k <= size(); ++k)
        image[static_cast<std::size_t>(k - 1)] = (*this)(inner(k));
      return QubitPermutation(std::move(image));
    }

    QubitPermutation inverse() const {
      std::vector<int> image(static_cast<std::size_t>(size()));
      for (int k = 1; k <= size(); ++k)
        image[static_cast<std::size_t>((*this)(k)-1)] = k;
      return QubitPermutation(std::move(image));
    }

    bool is_identity() const {
      for (int k = 1; k <= size(); ++k)
        if ((*this)(k) != k) return false;
      return true;
    }

    friend bool operator==(const QubitPermutation &a, const QubitPermutation &b) {
      return a.image_ == b.image_;
    }
    friend bool operator!=(const QubitPermutation &a, const QubitPermutation &b) {
      return !(a == b);
    }

  private:
    std::vector<int> image_;
};

} // namespace slocc
