#include "tclass/valuation_ideal.hpp"

#include <algorithm>

#include "tclass/errors.hpp"

namespace tclass {

namespace {

void require_same_group(const Cut& a, const Cut& b) {
  if (a.group_handle() != b.group_handle() && !(a.group() == b.group())) {
    throw DomainMismatch("cuts over different value groups " + a.group().describe() +
                         " and " + b.group().describe());
  }
}

std::vector<Rational> prefix(const std::vector<Rational>& v, std::size_t len) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(len)};
}

bool all_members(const ValueGroup& g, const std::vector<Rational>& boundary) {
  for (std::size_t j = 0; j < boundary.size(); ++j) {
    if (!g.components()[j].contains(boundary[j])) return false;
  }
  return true;
}

}  // namespace

bool Cut::contains(const GroupElement& x) const {
  validate(*group_, x);
  const auto c = compare_lex(std::span<const Rational>(x.coords).first(level_), boundary_);
  return side_ == Side::Closed ? c >= 0 : c > 0;
}

std::string Cut::to_string() const {
  std::string s = "<" + std::to_string(level_) + "; (";
  for (std::size_t j = 0; j < boundary_.size(); ++j) {
    if (j != 0) s += ", ";
    s += tclass::to_string(boundary_[j]);
  }
  return s + "); " + (side_ == Side::Closed ? "closed" : "open") + ">";
}

bool operator==(const Cut& a, const Cut& b) {
  return a.level_ == b.level_ && a.side_ == b.side_ && a.boundary_ == b.boundary_ &&
         (a.group_ == b.group_ || *a.group_ == *b.group_);
}

std::strong_ordering operator<=>(const Cut& a, const Cut& b) {
  if (auto c = a.level_ <=> b.level_; c != 0) return c;
  if (auto c = a.side_ <=> b.side_; c != 0) return c;
  return compare_lex(a.boundary_, b.boundary_);
}

Cut normalize(const CutSpec& spec, const GroupHandle& group) {
  const ValueGroup& g = *group;
  if (spec.level == 0 || spec.level > g.rank()) {
    throw MalformedCut("cut level " + std::to_string(spec.level) + " out of range 1.." +
                       std::to_string(g.rank()));
  }
  if (spec.boundary.size() != spec.level) {
    throw MalformedCut("cut at level " + std::to_string(spec.level) + " needs " +
                       std::to_string(spec.level) + " boundary coordinates, got " +
                       std::to_string(spec.boundary.size()));
  }
  for (std::size_t j = 1; j <= spec.level; ++j) {
    const ArchComponent& c = g.at_level(j);
    const Rational& bj = spec.boundary[j - 1];
    if (c.contains(bj)) continue;
    // No element has prefix_j equal to the boundary, so the set is
    // {prefix_j > b_1..b_j} whatever the original level and side were.
    auto b = prefix(spec.boundary, j);
    if (c.has_least_positive()) {
      b.back() = ceil(bj);
      return Cut(group, j, std::move(b), Side::Closed);
    }
    return Cut(group, j, std::move(b), Side::Open);
  }
  auto b = spec.boundary;
  if (spec.side == Side::Open && g.at_level(spec.level).has_least_positive()) {
    b.back() += 1;
    return Cut(group, spec.level, std::move(b), Side::Closed);
  }
  return Cut(group, spec.level, std::move(b), spec.side);
}

Cut ring_cut(const GroupHandle& group, std::size_t level) {
  return normalize({level, std::vector<Rational>(level, Rational(0)), Side::Closed}, group);
}

Cut ring_cut(const GroupHandle& group) { return ring_cut(group, group->rank()); }

Cut prime_cut(const GroupHandle& group, std::size_t level) {
  return normalize({level, std::vector<Rational>(level, Rational(0)), Side::Open}, group);
}

Cut principal(const GroupHandle& group, const GroupElement& value) {
  validate(*group, value);
  return normalize({group->rank(), value.coords, Side::Closed}, group);
}

Cut translate(const Cut& a, const GroupElement& shift) {
  validate(a.group(), shift);
  auto b = a.boundary();
  for (std::size_t j = 0; j < b.size(); ++j) b[j] += shift.coords[j];
  return normalize({a.level(), std::move(b), a.side()}, a.group_handle());
}

Cut mul(const Cut& a, const Cut& b) {
  require_same_group(a, b);
  const std::size_t level = std::min(a.level(), b.level());
  std::vector<Rational> boundary(level);
  for (std::size_t j = 0; j < level; ++j) boundary[j] = a.boundary()[j] + b.boundary()[j];
  Side side;
  if (a.level() == b.level()) {
    side = (a.side() == Side::Open || b.side() == Side::Open) ? Side::Open : Side::Closed;
  } else {
    // The deeper operand projects onto {prefix >= its truncated boundary}.
    side = a.level() < b.level() ? a.side() : b.side();
  }
  return normalize({level, std::move(boundary), side}, a.group_handle());
}

Cut quotient(const Cut& a, const Cut& b) {
  require_same_group(a, b);
  const std::size_t i = a.level();
  const std::size_t j = b.level();
  if (j < i) {
    // b is a union of full H_j-cosets, so only the cosets lying entirely
    // inside a matter: {p ∈ Γ/H_j : p > prefix_j(a)}.
    const Cut inner =
        normalize({j, prefix(a.boundary(), j), Side::Open}, a.group_handle());
    return quotient(inner, b);
  }
  std::vector<Rational> boundary(i);
  for (std::size_t k = 0; k < i; ++k) boundary[k] = a.boundary()[k] - b.boundary()[k];
  // An open b at the same level has an unattained infimum; the residual is
  // then closed at the difference whatever a's side.
  const Side side = (j == i && b.side() == Side::Open) ? Side::Closed : a.side();
  return normalize({i, std::move(boundary), side}, a.group_handle());
}

Cut inverse(const Cut& a) { return quotient(ring_cut(a.group_handle()), a); }

bool includes(const Cut& outer, const Cut& inner) {
  return quotient(outer, inner).contains(zero(outer.group()));
}

Cut v_closure(const Cut& a) {
  const Cut v = ring_cut(a.group_handle());
  return quotient(v, quotient(v, a));
}

Cut t_closure(const Cut& a) {
  // Finitely generated subideals of a valuation domain are principal, hence
  // divisorial, and a is their union.
  if (a.is_principal() && !(v_closure(a) == a)) {
    throw InternalInconsistency("principal cut " + a.to_string() + " is not divisorial");
  }
  return a;
}

Cut project(const Cut& a, const GroupHandle& truncated) {
  if (truncated->rank() < a.level() || truncated->rank() > a.group().rank()) {
    throw DomainMismatch("cut at level " + std::to_string(a.level()) +
                         " cannot be projected to rank " + std::to_string(truncated->rank()));
  }
  if (!(a.group().truncated(truncated->rank()) == *truncated)) {
    throw DomainMismatch("target group is not a prefix group of " + a.group().describe());
  }
  return normalize(a.spec(), truncated);
}

Cut lift(const Cut& a, const GroupHandle& full) {
  if (a.group().rank() > full->rank() || !(full->truncated(a.group().rank()) == a.group())) {
    throw DomainMismatch(a.group().describe() + " is not a prefix group of " +
                         full->describe());
  }
  return normalize(a.spec(), full);
}

Cut t_closure_over(const Cut& a, const Cut& overring) {
  require_same_group(a, overring);
  if (overring.side() != Side::Closed || !(overring == ring_cut(a.group_handle(), overring.level()))) {
    throw InvalidArgument(overring.to_string() + " is not an overring cut");
  }
  if (!(mul(overring, a) == a)) {
    throw InvalidArgument(a.to_string() + " is not an ideal of the overring " +
                          overring.to_string());
  }
  const GroupHandle t_group = make_group(a.group().truncated(overring.level()));
  return lift(t_closure(project(a, t_group)), a.group_handle());
}

Cut stabilizer(const Cut& a) { return ring_cut(a.group_handle(), a.level()); }

bool is_idempotent(const Cut& a) { return mul(a, a) == a; }

Cut idempotent_representative(const Cut& a) {
  return t_closure(mul(a, quotient(stabilizer(a), a)));
}

RegularityWitness is_regular(const Cut& a) {
  const Cut square = t_closure(mul(a, a));
  const Cut e = t_closure(mul(square, quotient(a, square)));
  if (!(e == a)) {
    throw InternalInconsistency("regularity identity fails for " + a.to_string() +
                                ": got " + e.to_string());
  }
  RegularityWitness w{idempotent_representative(a), std::nullopt};
  if (all_members(a.group(), a.boundary())) {
    GroupElement q = zero(a.group());
    std::copy(a.boundary().begin(), a.boundary().end(), q.coords.begin());
    if (!(translate(a, q) == square)) {
      throw InternalInconsistency("I^2 is not the translate of " + a.to_string() +
                                  " by its boundary");
    }
    w.shift = std::move(q);
  }
  return w;
}

IdempotentForm classify_idempotent(const Cut& a) {
  const Cut t = stabilizer(a);
  const Cut j = idempotent_representative(a);
  const OverringSpec overring{{a.level()}};
  if (j == t) {
    if (a.side() != Side::Closed) {
      throw InternalInconsistency("open cut " + a.to_string() + " attached to its stabilizer");
    }
    return RingForm{overring};
  }
  if (!(j == prime_cut(a.group_handle(), a.level())) || a.side() != Side::Open) {
    throw InternalInconsistency("unexpected idempotent " + j.to_string() + " for " +
                                a.to_string());
  }
  return MaxIdealsForm{overring, {0}};
}

CutClass::CutClass(const Cut& any_representative) : rep_(any_representative) {
  const ValueGroup& g = rep_.group();
  GroupElement shift = zero(g);
  for (std::size_t j = 0; j < rep_.level(); ++j) {
    const Rational& b = rep_.boundary()[j];
    shift.coords[j] = g.components()[j].reduce(b) - b;
  }
  rep_ = translate(rep_, shift);
}

bool membership_lemma_conditions(const Cut& l, const Cut& j) {
  require_same_group(l, j);
  if (!(stabilizer(l) == stabilizer(j))) return false;
  const Cut residual = quotient(l, t_closure(mul(l, l)));
  const Cut lx = t_closure(mul(l, residual));
  return lx == j && t_closure(mul(j, lx)) == j && t_closure(mul(l, quotient(j, l))) == j;
}

bool group_membership(const Cut& l, const Cut& j) {
  if (!is_idempotent(j)) throw NotIdempotent(j.to_string() + " is not idempotent");
  return membership_lemma_conditions(l, j) && idempotent_representative(l) == j;
}

CutClass group_mul(const CutClass& x, const CutClass& y, const Cut& j) {
  for (const CutClass* c : {&x, &y}) {
    if (!group_membership(c->representative(), j)) {
      throw NotInGroup(c->to_string() + " is not in the group of " + j.to_string());
    }
  }
  return CutClass(t_closure(mul(x.representative(), y.representative())));
}

CutClass group_inv(const CutClass& x, const Cut& j) {
  if (!group_membership(x.representative(), j)) {
    throw NotInGroup(x.to_string() + " is not in the group of " + j.to_string());
  }
  return CutClass(t_closure(mul(j, quotient(j, x.representative()))));
}

std::vector<Cut> idempotent_cuts(const GroupHandle& group) {
  std::vector<Cut> out;
  for (std::size_t level = 1; level <= group->rank(); ++level) {
    out.push_back(ring_cut(group, level));
    if (group->at_level(level).is_dense()) out.push_back(prime_cut(group, level));
  }
  return out;
}

}  // namespace tclass
