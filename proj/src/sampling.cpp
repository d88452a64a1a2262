#include "tclass/sampling.hpp"

#include <algorithm>

namespace tclass {

namespace {

std::uint64_t first_prime_outside(const std::vector<std::uint64_t>& primes, std::size_t skip) {
  static constexpr std::uint64_t kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  std::size_t seen = 0;
  for (std::uint64_t p : kSmallPrimes) {
    if (std::find(primes.begin(), primes.end(), p) != primes.end()) continue;
    if (seen++ == skip) return p;
  }
  return 37;
}

}  // namespace

std::int64_t Sampler::between(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

Rational Sampler::member(const ArchComponent& c) {
  switch (c.kind()) {
    case ComponentKind::Discrete:
      return Rational(static_cast<long>(between(-6, 6)));
    case ComponentKind::FullRational: {
      Rational q(static_cast<long>(between(-24, 24)), static_cast<unsigned long>(between(1, 12)));
      q.canonicalize();
      return q;
    }
    case ComponentKind::LocalizedIntegers: {
      const auto p = c.primes()[index(c.primes().size())];
      mpz_class den = 1;
      for (auto e = between(0, 3); e > 0; --e) den *= static_cast<unsigned long>(p);
      Rational q(mpz_class(static_cast<long>(between(-24, 24))), den);
      q.canonicalize();
      return q;
    }
  }
  return Rational(0);
}

std::optional<Rational> Sampler::non_member(const ArchComponent& c) {
  if (c.kind() == ComponentKind::FullRational) return std::nullopt;
  const std::uint64_t q = first_prime_outside(c.primes(), index(2));
  std::int64_t num = between(-4 * static_cast<std::int64_t>(q), 4 * static_cast<std::int64_t>(q));
  if (num % static_cast<std::int64_t>(q) == 0) num += 1;
  Rational r(static_cast<long>(num), static_cast<unsigned long>(q));
  if (c.kind() == ComponentKind::LocalizedIntegers && coin()) r /= static_cast<unsigned long>(c.primes().front());
  r.canonicalize();
  return r;
}

Rational Sampler::boundary_coordinate(const ArchComponent& c) {
  if (c.is_dense() && coin()) {
    if (auto q = non_member(c)) return *q;
  }
  return member(c);
}

GroupElement Sampler::element(const ValueGroup& g) {
  GroupElement x;
  for (const auto& c : g.components()) x.coords.push_back(member(c));
  return x;
}

Cut Sampler::cut(const GroupHandle& g) {
  const auto level = static_cast<std::size_t>(between(1, static_cast<std::int64_t>(g->rank())));
  std::vector<Rational> boundary;
  for (std::size_t j = 1; j <= level; ++j) {
    const ArchComponent& c = g->at_level(j);
    // Occasionally a non-member before the last coordinate exercises truncation.
    if (j < level && between(0, 9) == 0) {
      boundary.push_back(boundary_coordinate(c));
    } else if (j < level) {
      boundary.push_back(member(c));
    } else {
      boundary.push_back(boundary_coordinate(c));
    }
  }
  return normalize({level, std::move(boundary), coin() ? Side::Open : Side::Closed}, g);
}

Cut Sampler::cut_at_level(const GroupHandle& g, std::size_t level, Side side) {
  std::vector<Rational> boundary;
  for (std::size_t j = 1; j < level; ++j) boundary.push_back(member(g->at_level(j)));
  const ArchComponent& last = g->at_level(level);
  boundary.push_back(side == Side::Open ? boundary_coordinate(last) : member(last));
  return normalize({level, std::move(boundary), side}, g);
}

IdealTuple Sampler::tuple(const PrueferModel& model) {
  std::vector<Cut> cuts;
  for (const auto& g : model.valuations()) cuts.push_back(cut(g));
  return IdealTuple(model, std::move(cuts));
}

Cut Sampler::oracle_seed_cut(const GroupHandle& g) {
  const auto level = static_cast<std::size_t>(between(1, static_cast<std::int64_t>(g->rank())));
  std::vector<Rational> boundary;
  for (std::size_t j = 1; j < level; ++j) boundary.push_back(Rational(static_cast<long>(between(-2, 2))));
  const ArchComponent& last = g->at_level(level);
  Rational b(static_cast<long>(between(-2, 2)));
  if (last.kind() == ComponentKind::LocalizedIntegers && coin()) {
    const auto p = static_cast<std::int64_t>(first_prime_outside(last.primes(), 0));
    b += Rational(static_cast<long>(between(1, p - 1)), static_cast<unsigned long>(p));
  }
  boundary.push_back(b);
  return normalize({level, std::move(boundary), coin() ? Side::Open : Side::Closed}, g);
}

IdealTuple Sampler::oracle_seed_tuple(const PrueferModel& model) {
  std::vector<Cut> cuts;
  for (const auto& g : model.valuations()) cuts.push_back(oracle_seed_cut(g));
  return IdealTuple(model, std::move(cuts));
}

}  // namespace tclass
