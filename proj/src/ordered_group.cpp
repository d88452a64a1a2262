#include "tclass/ordered_group.hpp"

#include <algorithm>

#include "tclass/errors.hpp"

namespace tclass {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Splits the denominator d into (S-part, part coprime to S).
std::pair<mpz_class, mpz_class> split_denominator(const mpz_class& d,
                                                  const std::vector<std::uint64_t>& primes) {
  mpz_class coprime = d;
  mpz_class s_part = 1;
  for (std::uint64_t p : primes) {
    const mpz_class pz(static_cast<unsigned long>(p));
    while (mpz_divisible_p(coprime.get_mpz_t(), pz.get_mpz_t()) != 0) {
      coprime /= pz;
      s_part *= pz;
    }
  }
  return {s_part, coprime};
}

}  // namespace

ArchComponent ArchComponent::discrete() { return {ComponentKind::Discrete, {}}; }

ArchComponent ArchComponent::full_rational() { return {ComponentKind::FullRational, {}}; }

ArchComponent ArchComponent::localized(std::vector<std::uint64_t> primes) {
  if (primes.empty()) {
    throw InvalidArgument("localized component needs at least one prime (use Z instead)");
  }
  for (std::uint64_t p : primes) {
    if (!is_prime(p)) throw InvalidArgument("localized component: " + std::to_string(p) +
                                            " is not prime");
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return {ComponentKind::LocalizedIntegers, std::move(primes)};
}

bool ArchComponent::contains(const Rational& q) const {
  switch (kind_) {
    case ComponentKind::Discrete:
      return q.get_den() == 1;
    case ComponentKind::FullRational:
      return true;
    case ComponentKind::LocalizedIntegers:
      return split_denominator(q.get_den(), primes_).second == 1;
  }
  return false;
}

Rational ArchComponent::reduce(const Rational& q) const {
  switch (kind_) {
    case ComponentKind::Discrete:
      return q - floor(q);
    case ComponentKind::FullRational:
      return Rational(0);
    case ComponentKind::LocalizedIntegers: {
      // q = p / (s * c) with s an S-number and gcd(c, S) = 1. The class of q
      // modulo Z[1/S] is represented by r / c, 0 <= r < c, r = p * s^-1 mod c.
      const auto [s_part, coprime] = split_denominator(q.get_den(), primes_);
      if (coprime == 1) return Rational(0);
      mpz_class s_inv;
      mpz_invert(s_inv.get_mpz_t(), s_part.get_mpz_t(), coprime.get_mpz_t());
      mpz_class r = q.get_num() * s_inv;
      mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), coprime.get_mpz_t());
      Rational out(r, coprime);
      out.canonicalize();
      return out;
    }
  }
  return q;
}

std::string ArchComponent::describe() const {
  switch (kind_) {
    case ComponentKind::Discrete:
      return "Z";
    case ComponentKind::FullRational:
      return "Q";
    case ComponentKind::LocalizedIntegers: {
      std::string s = "Z[";
      for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (i != 0) s += ",";
        s += "1/" + std::to_string(primes_[i]);
      }
      return s + "]";
    }
  }
  return "?";
}

ValueGroup::ValueGroup(std::vector<ArchComponent> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw InvalidArgument("value group must have rank >= 1");
}

const ArchComponent& ValueGroup::at_level(std::size_t level) const {
  if (level == 0 || level > components_.size()) {
    throw InvalidArgument("level " + std::to_string(level) + " out of range 1.." +
                          std::to_string(components_.size()));
  }
  return components_[level - 1];
}

ValueGroup ValueGroup::truncated(std::size_t level) const {
  if (level == 0 || level > components_.size()) {
    throw InvalidArgument("truncation level " + std::to_string(level) + " out of range");
  }
  return ValueGroup({components_.begin(),
                     components_.begin() + static_cast<std::ptrdiff_t>(level)});
}

std::string ValueGroup::describe() const {
  std::string s = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i != 0) s += ", ";
    s += components_[i].describe();
  }
  return s + ")";
}

GroupHandle make_group(std::vector<ArchComponent> components) {
  return std::make_shared<const ValueGroup>(std::move(components));
}

GroupHandle make_group(ValueGroup group) {
  return std::make_shared<const ValueGroup>(std::move(group));
}

void validate(const ValueGroup& g, const GroupElement& a) {
  if (a.coords.size() != g.rank()) {
    throw MalformedElement("element has " + std::to_string(a.coords.size()) +
                           " coordinates, group rank is " + std::to_string(g.rank()));
  }
  for (std::size_t j = 0; j < a.coords.size(); ++j) {
    if (!g.components()[j].contains(a.coords[j])) {
      throw MalformedElement("coordinate " + std::to_string(j + 1) + " = " +
                             to_string(a.coords[j]) + " is not in " +
                             g.components()[j].describe());
    }
  }
}

std::strong_ordering compare(const ValueGroup& g, const GroupElement& a,
                             const GroupElement& b) {
  validate(g, a);
  validate(g, b);
  return compare_lex(a.coords, b.coords);
}

GroupElement add(const ValueGroup& g, const GroupElement& a, const GroupElement& b) {
  validate(g, a);
  validate(g, b);
  GroupElement out{a.coords};
  for (std::size_t j = 0; j < out.coords.size(); ++j) out.coords[j] += b.coords[j];
  return out;
}

GroupElement neg(const ValueGroup& g, const GroupElement& a) {
  validate(g, a);
  GroupElement out{a.coords};
  for (auto& c : out.coords) c = -c;
  return out;
}

GroupElement zero(const ValueGroup& g) {
  return GroupElement{std::vector<Rational>(g.rank(), Rational(0))};
}

std::vector<ConvexSubgroup> convex_subgroups(const ValueGroup& g) {
  std::vector<ConvexSubgroup> out;
  for (std::size_t i = 0; i <= g.rank(); ++i) out.push_back({i});
  return out;
}

bool contains(const ValueGroup& g, ConvexSubgroup h, const GroupElement& a) {
  validate(g, a);
  if (h.index > g.rank()) throw InvalidArgument("convex subgroup index out of range");
  return std::all_of(a.coords.begin(), a.coords.begin() + static_cast<std::ptrdiff_t>(h.index),
                     [](const Rational& q) { return q == 0; });
}

bool quotient_has_least_positive(const ValueGroup& g, ConvexSubgroup h) {
  if (h.index == 0) {
    throw UndefinedQuotient("H_0 is the whole group; the zero prime has no quotient test");
  }
  // Γ/H_i is the lex tower C_1 x ... x C_i; its positive elements with a
  // vanishing prefix accumulate at 0 exactly when C_i is dense.
  return g.at_level(h.index).has_least_positive();
}

bool is_strongly_discrete(const ValueGroup& g) {
  for (std::size_t i = 1; i <= g.rank(); ++i) {
    if (!quotient_has_least_positive(g, {i})) return false;
  }
  return true;
}

}  // namespace tclass
