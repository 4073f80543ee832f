#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>

namespace bmax {

/// Counter-based PRNG (Philox-style 4x64, 10 rounds). A stream is addressed
/// by (seed, replicate, stream); draws within a stream are indexed by an
/// internal block counter. Streams can therefore be generated in any order,
/// on any worker, with identical output. The raw 64-bit stream is
/// platform-independent; the normal transform uses libm (log/sin/cos), so
/// bit-exactness across platforms is as good as the local libm rounding.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t replicate, std::uint64_t stream);

  std::uint64_t next_u64();
  /// Uniform in the open interval (0, 1).
  double next_uniform();
  /// Standard normal via Box-Muller; draws are produced in pairs.
  double next_normal();
  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t next_below(std::uint64_t bound);

  Eigen::VectorXd normal_vector(int n);

 private:
  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> counter_;
  std::array<std::uint64_t, 4> buffer_{};
  int buffer_pos_ = 4;
  double spare_normal_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace bmax
