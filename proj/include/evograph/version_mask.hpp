// Copyright (c) evograph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>

#include "evograph/errors.hpp"

namespace evograph {

// Snapshot capacity grows in 64-bit words. Override at compile time to track
// more than 64 snapshots per edge.
#ifndef EVOGRAPH_MASK_WORDS
#define EVOGRAPH_MASK_WORDS 1
#endif

inline constexpr std::size_t kMaskWords = EVOGRAPH_MASK_WORDS;
inline constexpr std::size_t kMaxSnapshots = kMaskWords * 64;

static_assert(kMaskWords >= 1, "mask needs at least one word");

// Bit i set means the edge belongs to snapshot i.
struct VersionMask {
  std::array<std::uint64_t, kMaskWords> words{};

  friend constexpr auto operator<=>(const VersionMask&, const VersionMask&) = default;

  constexpr void set(std::size_t i) {
    words[i / 64] |= std::uint64_t{1} << (i % 64);
  }

  constexpr bool test(std::size_t i) const {
    return (words[i / 64] >> (i % 64)) & 1u;
  }

  constexpr bool any() const {
    for (std::uint64_t w : words) {
      if (w != 0) return true;
    }
    return false;
  }

  constexpr std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  // Mask covering snapshots [0, n).
  static constexpr VersionMask all_ones(std::size_t n) {
    VersionMask m;
    for (std::size_t word = 0; word * 64 < n; ++word) {
      std::size_t bits = n - word * 64;
      m.words[word] = bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
    }
    return m;
  }

  // Calls fn(i) for every set bit, ascending.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t word = 0; word < kMaskWords; ++word) {
      std::uint64_t w = words[word];
      while (w != 0) {
        unsigned bit = static_cast<unsigned>(std::countr_zero(w));
        fn(word * 64 + bit);
        w &= w - 1;
      }
    }
  }
};

inline bool mask_has_snapshot(const VersionMask& mask, std::size_t snapshot) {
  if (snapshot >= kMaxSnapshots) {
    throw RangeError("snapshot index " + std::to_string(snapshot) +
                     " exceeds mask capacity of " + std::to_string(kMaxSnapshots));
  }
  return mask.test(snapshot);
}

}  // namespace evograph
