#pragma once

#include <cstdint>
#include <utility>

namespace graphspace {

namespace detail {

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ull;

inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t combine(std::uint64_t a, std::uint64_t b) noexcept {
  return mix64(mix64(a + kGoldenGamma) ^ (b + 0x6a09e667f3bcc909ull));
}

}  // namespace detail

/// Deterministic counter-based random stream. A stream is identified by
/// (master_seed, index); the same pair always produces the same draw
/// sequence, and distinct indices behave as independent streams, so
/// Monte-Carlo loops can hand stream `at(t)` to sample t and run in any
/// order (or in parallel) without changing results.
class RngStream {
 public:
  explicit RngStream(std::uint64_t master_seed, std::uint64_t index = 0) noexcept
      : master_seed_(master_seed),
        index_(index),
        state_(detail::combine(master_seed, index)) {}

  /// Sibling stream: same master seed, different sample counter.
  RngStream at(std::uint64_t index) const noexcept {
    return RngStream(master_seed_, index);
  }

  /// Derived stream family rooted at this stream's identity. Children with
  /// distinct tags do not collide with siblings produced by at().
  RngStream child(std::uint64_t tag) const noexcept {
    return RngStream(detail::combine(detail::combine(master_seed_, index_), tag), 0);
  }

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  std::uint64_t index() const noexcept { return index_; }

  std::uint64_t next_u64() noexcept {
    state_ += detail::kGoldenGamma;
    return detail::mix64(state_);
  }

  /// Unbiased draw in [0, bound); bound must be >= 1.
  std::uint64_t below(std::uint64_t bound) noexcept {
    // Lemire's multiply-shift with rejection.
    std::uint64_t x = next_u64();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      std::uint64_t threshold = (0 - bound) % bound;
      while (lo < threshold) {
        x = next_u64();
        m = static_cast<__uint128_t>(x) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Fisher-Yates shuffle.
  template <typename Container>
  void shuffle(Container& v) noexcept {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      using std::swap;
      swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t master_seed_;
  std::uint64_t index_;
  std::uint64_t state_;
};

}  // namespace graphspace
