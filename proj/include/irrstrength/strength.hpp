#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

#include "irrstrength/labeling.hpp"

namespace irrstrength {

// A strength value: either a finite label bound or infinity.
class Strength {
 public:
  static constexpr Strength finite(Label k) { return Strength(k); }
  static constexpr Strength infinite() { return Strength(); }

  constexpr bool is_finite() const noexcept { return k_ > 0; }
  constexpr bool is_infinite() const noexcept { return k_ == 0; }

  Label value() const {
    if (is_infinite()) throw std::logic_error("strength is infinite");
    return k_;
  }

  friend constexpr bool operator==(Strength, Strength) = default;

  std::string str() const { return is_infinite() ? "inf" : std::to_string(k_); }

  friend std::ostream& operator<<(std::ostream& os, Strength s) {
    return os << s.str();
  }

 private:
  constexpr Strength() = default;
  constexpr explicit Strength(Label k) : k_(k) {}
  Label k_ = 0;
};

}  // namespace irrstrength
