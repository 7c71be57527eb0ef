#pragma once

#include <atomic>
#include <cstdint>

namespace strat {

/// Counters for the exact self-checks run after every Groebner basis,
/// Smith normal form and syzygy computation. A failed check throws
/// CertificationError; these counters only record how many passed.
struct CertificationStats {
  std::atomic<std::uint64_t> groebner_bases{0};
  std::atomic<std::uint64_t> s_pairs{0};
  std::atomic<std::uint64_t> smith_forms{0};
  std::atomic<std::uint64_t> syzygies{0};
};

inline CertificationStats& certification_stats() {
  static CertificationStats stats;
  return stats;
}

/// Buchberger S-pair re-check after each basis. On by default.
inline std::atomic<bool>& groebner_self_check() {
  static std::atomic<bool> on{true};
  return on;
}

}  // namespace strat
