#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pomkit {

/// Binary relation on {0, ..., n-1} stored as a dense bit matrix.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  static Relation identity(std::size_t n) {
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i) r.set(i, i);
    return r;
  }

  std::size_t size() const noexcept { return n_; }

  bool test(std::size_t i, std::size_t j) const noexcept {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j) noexcept {
    bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
  }

  bool empty() const noexcept;
  bool row_empty(std::size_t i) const noexcept;
  /// True iff row i meets the set given as a bit row of the same width.
  bool row_meets(std::size_t i, const std::vector<std::uint64_t>& set) const noexcept;
  std::size_t count() const noexcept;

  /// Calls f(j) for every j with test(i, j), in ascending order.
  template <class F>
  void for_each_in_row(std::size_t i, F&& f) const {
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t word = bits_[i * words_ + w];
      while (word != 0) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  /// {(i, k) : (i, j) in this, (j, k) in other}.
  Relation then(const Relation& other) const;
  /// Adds every pair of `other`; returns true if something was added.
  bool merge(const Relation& other) noexcept;
  /// Reflexive-transitive closure in place.
  void close_reflexive_transitive();

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  void or_row(std::size_t into, const Relation& from, std::size_t row) noexcept;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace pomkit
