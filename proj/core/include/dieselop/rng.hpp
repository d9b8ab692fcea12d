#pragma once

#include <cstdint>
#include <vector>

namespace dieselop {

/// Splittable counter-based random stream (splitmix64 core).
///
/// `fork(key)` derives an independent child stream from the parent's base
/// seed only, so the derivation is insensitive to how many values the parent
/// has already drawn. That property is what makes shuffles, dropout masks and
/// noise draws reproducible under checkpoint resume and safe to hand out to
/// parallel workers.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  RngStream fork(std::uint64_t key) const;

  std::uint64_t next_u64();

  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi);

  /// Uniform integer in [0, n), n >= 1.
  std::uint64_t below(std::uint64_t n);

  /// Standard normal via Box-Muller (second value cached).
  double gaussian();

  std::uint64_t base_seed() const noexcept { return base_; }

 private:
  std::uint64_t base_;
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Seeded Fisher-Yates permutation of {0, ..., n-1}.
std::vector<std::size_t> random_permutation(std::size_t n, RngStream& rng);

}  // namespace dieselop
