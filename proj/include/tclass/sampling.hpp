#pragma once

// Seeded random generation of group elements, cuts and ideal tuples for the
// property checks. The same seed always yields the same sequence.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

#include "tclass/ordered_group.hpp"
#include "tclass/pruefer_fc.hpp"
#include "tclass/valuation_ideal.hpp"

namespace tclass {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::int64_t between(std::int64_t lo, std::int64_t hi);
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(between(0, static_cast<std::int64_t>(n) - 1)); }
  bool coin() { return between(0, 1) == 1; }

  Rational member(const ArchComponent& c);
  /// A rational outside c; nullopt when c = Q.
  std::optional<Rational> non_member(const ArchComponent& c);
  /// A member or, for dense components, sometimes a non-member.
  Rational boundary_coordinate(const ArchComponent& c);

  GroupElement element(const ValueGroup& g);
  Cut cut(const GroupHandle& g);
  /// Random canonical cut at exactly `level` with the requested side before
  /// normalization; earlier coordinates are members.
  Cut cut_at_level(const GroupHandle& g, std::size_t level, Side side);
  IdealTuple tuple(const PrueferModel& model);

  /// Cuts whose classes have small finite order (boundaries k/p with p the
  /// smallest prime outside the component), so that closures stay small.
  Cut oracle_seed_cut(const GroupHandle& g);
  IdealTuple oracle_seed_tuple(const PrueferModel& model);

 private:
  std::mt19937_64 engine_;
};

}  // namespace tclass
