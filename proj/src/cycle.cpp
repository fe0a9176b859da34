#include "sl2real/cycle.hpp"

#include "sl2real/errors.hpp"

#include <algorithm>

namespace sl2real {

Word::Word(std::vector<Int> exponents, Letter starts_with)
    : exponents_(std::move(exponents)), starts_with_(starts_with) {
  if (exponents_.empty()) throw Error(ErrorCode::InvalidArgument, "empty word");
  for (const auto& e : exponents_) {
    if (e < 1) throw Error(ErrorCode::InvalidArgument, "word exponent " + e.str() + " < 1");
  }
}

Letter Word::letter_at(std::size_t i) const {
  const bool same = (i % 2 == 0);
  if (starts_with_ == Letter::U) return same ? Letter::U : Letter::V;
  return same ? Letter::V : Letter::U;
}

std::vector<Int> rotate_left(const std::vector<Int>& seq, std::size_t offset) {
  std::vector<Int> out(seq);
  if (!out.empty()) {
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(offset % out.size()),
                out.end());
  }
  return out;
}

std::size_t least_rotation(const std::vector<Int>& seq) {
  const std::size_t n = seq.size();
  std::vector<Int> doubled(seq);
  doubled.insert(doubled.end(), seq.begin(), seq.end());
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    if (std::lexicographical_compare(doubled.begin() + r, doubled.begin() + r + n,
                                     doubled.begin() + best, doubled.begin() + best + n)) {
      best = r;
    }
  }
  return best;
}

Cycle::Cycle(std::vector<Int> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.size() < 2 || exponents_.size() % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument,
                "cycle length " + std::to_string(exponents_.size()) + " is not even and >= 2");
  }
  for (const auto& e : exponents_) {
    if (e < 1) throw Error(ErrorCode::InvalidArgument, "cycle exponent " + e.str() + " < 1");
  }
  canonical_ = rotate_left(exponents_, least_rotation(exponents_));
}

Cycle Cycle::rotated(std::size_t offset) const { return Cycle(rotate_left(exponents_, offset)); }

Cycle Cycle::reversed() const {
  return Cycle(std::vector<Int>(exponents_.rbegin(), exponents_.rend()));
}

Word Cycle::word() const { return Word(exponents_, Letter::U); }

bool Cycle::equal_up_to_even_rotation(const Cycle& other) const {
  if (size() != other.size()) return false;
  for (std::size_t r = 0; r < size(); r += 2) {
    if (rotate_left(other.exponents_, r) == exponents_) return true;
  }
  return false;
}

bool operator<(const Cycle& lhs, const Cycle& rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
  return lhs.canonical_ < rhs.canonical_;
}

}  // namespace sl2real
