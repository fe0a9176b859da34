#pragma once

#include "sl2real/mat2.hpp"

#include <cstddef>
#include <vector>

namespace sl2real {

enum class Letter { U, V };

/// Alternating product U^x1 V^x2 ... or V^x1 U^x2 ...; all exponents >= 1.
class Word {
 public:
  Word(std::vector<Int> exponents, Letter starts_with);

  const std::vector<Int>& exponents() const { return exponents_; }
  Letter starts_with() const { return starts_with_; }
  Letter letter_at(std::size_t i) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Int> exponents_;
  Letter starts_with_;
};

/// Cutting period-cycle: even-length cyclic sequence of positive integers.
///
/// exponents() keeps the order the cycle was built with (for a cycle returned
/// by cutting_cycle it is the word matching the returned conjugator, with U at
/// even indices). Equality is up to rotation via the lexicographically least
/// rotation.
class Cycle {
 public:
  explicit Cycle(std::vector<Int> exponents);

  const std::vector<Int>& exponents() const { return exponents_; }
  const std::vector<Int>& canonical() const { return canonical_; }
  std::size_t size() const { return exponents_.size(); }

  Cycle rotated(std::size_t offset) const;
  Cycle reversed() const;

  /// U^e0 V^e1 ... V^e(2n-1)
  Word word() const;

  bool equal_up_to_even_rotation(const Cycle& other) const;

  friend bool operator==(const Cycle& lhs, const Cycle& rhs) {
    return lhs.canonical_ == rhs.canonical_;
  }
  friend bool operator<(const Cycle& lhs, const Cycle& rhs);

 private:
  std::vector<Int> exponents_;
  std::vector<Int> canonical_;
};

/// Offset of the lexicographically least rotation.
std::size_t least_rotation(const std::vector<Int>& seq);

std::vector<Int> rotate_left(const std::vector<Int>& seq, std::size_t offset);

}  // namespace sl2real

namespace sl2real {

/// Limits for the continued-fraction reduction behind cutting_cycle.
struct CycleOptions {
  /// Maximum number of pre-period steps before ReductionOverflow.
  std::size_t cf_cap = 10000;
};

}  // namespace sl2real
