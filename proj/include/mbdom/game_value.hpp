#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace mbdom {

// Number of Dominator moves needed to win, or infinite when Staller can keep
// some vertex undominated forever. Total order with infinite as the greatest
// element; addition saturates at infinite.
class GameValue {
 public:
  constexpr GameValue() = default;  // Finite(0)

  static constexpr GameValue finite(int moves) {
    if (moves < 0) throw std::invalid_argument("GameValue: negative move count");
    GameValue v;
    v.moves_ = moves;
    return v;
  }

  static constexpr GameValue infinite() {
    GameValue v;
    v.moves_ = kInfinite;
    return v;
  }

  constexpr bool is_finite() const { return moves_ != kInfinite; }

  constexpr int moves() const {
    if (!is_finite()) throw std::logic_error("GameValue::moves on infinite value");
    return moves_;
  }

  friend constexpr bool operator==(GameValue, GameValue) = default;

  friend constexpr std::strong_ordering operator<=>(GameValue a, GameValue b) {
    if (a.moves_ == b.moves_) return std::strong_ordering::equal;
    if (a.moves_ == kInfinite) return std::strong_ordering::greater;
    if (b.moves_ == kInfinite) return std::strong_ordering::less;
    return a.moves_ <=> b.moves_;
  }

  friend constexpr GameValue operator+(GameValue a, GameValue b) {
    if (!a.is_finite() || !b.is_finite()) return infinite();
    return finite(a.moves_ + b.moves_);
  }

  // Saturating add of a finite increment.
  constexpr GameValue plus(int extra) const {
    return is_finite() ? finite(moves_ + extra) : infinite();
  }

  std::string str() const { return is_finite() ? std::to_string(moves_) : "inf"; }

 private:
  static constexpr int kInfinite = -1;
  int moves_ = 0;
};

}  // namespace mbdom
