#include "pomkit/relation.hpp"

#include <algorithm>

namespace pomkit {

bool Relation::empty() const noexcept {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

bool Relation::row_empty(std::size_t i) const noexcept {
  for (std::size_t w = 0; w < words_; ++w) {
    if (bits_[i * words_ + w] != 0) return false;
  }
  return true;
}

bool Relation::row_meets(std::size_t i, const std::vector<std::uint64_t>& set) const noexcept {
  for (std::size_t w = 0; w < words_; ++w) {
    if ((bits_[i * words_ + w] & set[w]) != 0) return true;
  }
  return false;
}

std::size_t Relation::count() const noexcept {
  std::size_t c = 0;
  for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

void Relation::or_row(std::size_t into, const Relation& from, std::size_t row) noexcept {
  for (std::size_t w = 0; w < words_; ++w) bits_[into * words_ + w] |= from.bits_[row * words_ + w];
}

Relation Relation::then(const Relation& other) const {
  Relation out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for_each_in_row(i, [&](std::size_t j) { out.or_row(i, other, j); });
  }
  return out;
}

bool Relation::merge(const Relation& other) noexcept {
  bool changed = false;
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    std::uint64_t before = bits_[k];
    bits_[k] |= other.bits_[k];
    changed |= bits_[k] != before;
  }
  return changed;
}

void Relation::close_reflexive_transitive() {
  for (std::size_t i = 0; i < n_; ++i) set(i, i);
  for (std::size_t k = 0; k < n_; ++k) {
    for (std::size_t i = 0; i < n_; ++i) {
      if (test(i, k)) or_row(i, *this, k);
    }
  }
}

}  // namespace pomkit
