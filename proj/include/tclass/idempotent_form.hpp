#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace tclass {

/// T = ∩ (V_i)_{P_i}, P_i the prime attached to H_{levels[i]} in component i.
/// Every level is >= 1, so T is always a fractional overring.
struct OverringSpec {
  std::vector<std::size_t> levels;

  friend bool operator==(const OverringSpec&, const OverringSpec&) = default;
  friend auto operator<=>(const OverringSpec&, const OverringSpec&) = default;
};

/// The idempotent is T itself.
struct RingForm {
  OverringSpec overring;

  friend bool operator==(const RingForm&, const RingForm&) = default;
};

/// The idempotent is the intersection of the maximal ideals of T sitting over
/// the listed components (0-based, sorted, nonempty). Each of them is
/// idempotent, i.e. the component is dense at the chosen level.
struct MaxIdealsForm {
  OverringSpec overring;
  std::vector<std::size_t> components;

  friend bool operator==(const MaxIdealsForm&, const MaxIdealsForm&) = default;
};

using IdempotentForm = std::variant<RingForm, MaxIdealsForm>;

inline const OverringSpec& overring_of(const IdempotentForm& form) {
  return std::visit([](const auto& f) -> const OverringSpec& { return f.overring; }, form);
}

inline bool is_ring_form(const IdempotentForm& form) {
  return std::holds_alternative<RingForm>(form);
}

/// Components in the MaxIdeals set; empty for RingForm.
inline std::vector<std::size_t> max_ideal_components(const IdempotentForm& form) {
  if (const auto* m = std::get_if<MaxIdealsForm>(&form)) return m->components;
  return {};
}

/// "Ring(T[1,2])" / "MaxIdeals(T[1,2], {1})", components printed 1-based.
std::string describe(const IdempotentForm& form);

}  // namespace tclass
