#pragma once

#include <string>
#include <vector>

#include "tclass/ordered_group.hpp"
#include "tclass/valuation_ideal.hpp"

namespace testing {

using namespace tclass;

inline GroupHandle group_of(std::vector<ArchComponent> cs) { return make_group(std::move(cs)); }
inline ArchComponent Zc() { return ArchComponent::discrete(); }
inline ArchComponent Qc() { return ArchComponent::full_rational(); }
inline ArchComponent Zloc(std::vector<std::uint64_t> ps) { return ArchComponent::localized(std::move(ps)); }

inline GroupHandle Z() { return group_of({Zc()}); }
inline GroupHandle Q() { return group_of({Qc()}); }
inline GroupHandle Z2() { return group_of({Zc(), Zc()}); }
inline GroupHandle Zhalf() { return group_of({Zloc({2})}); }
inline GroupHandle ZQ() { return group_of({Zc(), Qc()}); }
inline GroupHandle ZZthird() { return group_of({Zc(), Zloc({3})}); }

inline std::vector<Rational> rats(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.push_back(parse_rational(x));
  return out;
}

inline Cut cut(const GroupHandle& g, std::size_t level, std::initializer_list<const char*> b, Side side) {
  return normalize(CutSpec{level, rats(b), side}, g);
}

inline Cut closed(const GroupHandle& g, std::initializer_list<const char*> b) {
  return cut(g, b.size(), b, Side::Closed);
}

inline Cut open(const GroupHandle& g, std::initializer_list<const char*> b) {
  return cut(g, b.size(), b, Side::Open);
}

inline GroupElement elem(std::initializer_list<const char*> xs) { return GroupElement{rats(xs)}; }

}  // namespace testing
