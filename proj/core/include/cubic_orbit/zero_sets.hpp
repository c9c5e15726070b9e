#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "cubic_orbit/linearization.hpp"
#include "cubic_orbit/matrix_power.hpp"

namespace cubic_orbit {

inline constexpr std::uint64_t kDefaultHorizon = 64;

enum class ZeroSetStatus { Member, NonMember, UnknownWithinHorizon };

/// "member", "non-member", "unknown".
std::string_view to_string(ZeroSetStatus status);

/**
 * Outcome of a zero-set membership query.
 *
 * Member carries the least n with u_n = 0 or v_n = 0; the orbit then has
 * x_m = y_m = 0 for every m > witness. NonMember is only reported when an exact
 * argument covers every n. UnknownWithinHorizon means an exact scan of
 * n <= horizon found no zero.
 */
struct ZeroSetVerdict {
  ZeroSetStatus status = ZeroSetStatus::NonMember;
  std::optional<std::uint64_t> witness;
  std::optional<std::uint64_t> horizon;

  bool member() const { return status == ZeroSetStatus::Member; }

  static ZeroSetVerdict member_at(std::uint64_t witness) { return {ZeroSetStatus::Member, witness, {}}; }
  static ZeroSetVerdict non_member() { return {ZeroSetStatus::NonMember, {}, {}}; }
  static ZeroSetVerdict unknown(std::uint64_t horizon) {
    return {ZeroSetStatus::UnknownWithinHorizon, {}, horizon};
  }

  friend bool operator==(const ZeroSetVerdict&, const ZeroSetVerdict&) = default;
};

/// ad - bc = 0. Includes the nilpotent subcase a + d = 0, where every pair is a member.
ZeroSetVerdict z0_member(const SystemParams& p, const InitialPair& init);

/**
 * ad - bc != 0, D != 0, a + d != 0.
 *
 * Real eigenvalues have distinct moduli here, so the zero condition
 * k1 l1^n = k2 l2^n admits a crossover bound past which no solution exists;
 * this decides membership exactly for rational and real-irrational
 * eigenvalues. Complex eigenvalues are decided exactly when some A^k (k <= 6)
 * is scalar, and otherwise scanned up to `horizon`.
 */
ZeroSetVerdict z1_member(const SystemParams& p, const InitialPair& init,
                         std::uint64_t horizon = kDefaultHorizon);

/// ad - bc != 0, D = 0. Both conditions are linear in n, so membership is decided exactly.
ZeroSetVerdict z2_member(const SystemParams& p, const InitialPair& init);

/// ad - bc != 0, D != 0, a + d = 0.
ZeroSetVerdict z3_member(const SystemParams& p, const InitialPair& init);

/// Dispatches on classify(p). Throws DegenerateParameters when a = b = 0 or c = d = 0.
ZeroSetVerdict zero_set_member(const SystemParams& p, const InitialPair& init,
                               std::uint64_t horizon = kDefaultHorizon);

}  // namespace cubic_orbit
