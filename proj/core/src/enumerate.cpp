#include <algorithm>

#include "pomkit/errors.hpp"
#include "pomkit/pomset.hpp"

namespace pomkit {

namespace {

// Generates pomsets size by size.  Seq nodes are sequences of non-Seq parts,
// Par nodes are multisets of non-Par parts, so every canonical pomset is
// produced exactly once from the pools of strictly smaller sizes.
class Generator {
 public:
  Generator(const Alphabet& alphabet, std::size_t n,
            const std::function<bool(const Pomset&)>& admit, const Limits& limits)
      : alphabet_(alphabet), n_(n), admit_(admit), limits_(limits), by_size_(n + 1),
        non_seq_(n + 1), non_par_(n + 1) {}

  std::vector<std::vector<Pomset>> run() {
    by_size_[0].push_back(Pomset::empty());
    count_ = 1;
    for (std::size_t k = 1; k <= n_; ++k) {
      if (k == 1) {
        for (const auto& a : alphabet_) offer(Pomset::prim(a), 1);
      }
      std::vector<Pomset> seq;
      sequences(k, seq);
      build_par_candidates(k);
      std::vector<Pomset> par;
      multisets(k, 0, par);
    }
    return std::move(by_size_);
  }

 private:
  void offer(const Pomset& u, std::size_t k) {
    if (!admit_(u)) return;
    if (++count_ > limits_.max_pomsets) {
      throw ResourceLimit("pomset enumeration exceeded budget of " +
                          std::to_string(limits_.max_pomsets));
    }
    by_size_[k].push_back(u);
    if (u.kind() != Pomset::Kind::Seq) non_seq_[k].push_back(u);
    if (u.kind() != Pomset::Kind::Par) non_par_[k].push_back(u);
  }

  void sequences(std::size_t remaining, std::vector<Pomset>& current) {
    for (std::size_t s = 1; s <= remaining; ++s) {
      if (current.empty() && s == remaining) continue;  // at least two parts
      for (const auto& p : non_seq_[s]) {
        current.push_back(p);
        if (s == remaining) {
          offer(seq_of(current), size_of(current));
        } else {
          sequences(remaining - s, current);
        }
        current.pop_back();
      }
    }
  }

  void build_par_candidates(std::size_t k) {
    candidates_.clear();
    for (std::size_t s = 1; s < k; ++s) {
      candidates_.insert(candidates_.end(), non_par_[s].begin(), non_par_[s].end());
    }
    std::sort(candidates_.begin(), candidates_.end());
    target_ = k;
  }

  void multisets(std::size_t remaining, std::size_t from, std::vector<Pomset>& current) {
    for (std::size_t i = from; i < candidates_.size(); ++i) {
      const Pomset& p = candidates_[i];
      if (p.size() > remaining) continue;
      current.push_back(p);
      if (p.size() == remaining) {
        if (current.size() >= 2) offer(par_of(current), target_);
      } else {
        multisets(remaining - p.size(), i, current);
      }
      current.pop_back();
    }
  }

  static std::size_t size_of(const std::vector<Pomset>& parts) {
    std::size_t s = 0;
    for (const auto& p : parts) s += p.size();
    return s;
  }

  const Alphabet& alphabet_;
  std::size_t n_;
  const std::function<bool(const Pomset&)>& admit_;
  const Limits& limits_;
  std::size_t count_ = 0;
  std::vector<std::vector<Pomset>> by_size_;
  std::vector<std::vector<Pomset>> non_seq_;
  std::vector<std::vector<Pomset>> non_par_;
  std::vector<Pomset> candidates_;
  std::size_t target_ = 0;
};

}  // namespace

std::vector<std::vector<Pomset>> enumerate_pomsets_pruned(
    const Alphabet& alphabet, std::size_t n, const std::function<bool(const Pomset&)>& admit,
    const Limits& limits) {
  return Generator(alphabet, n, admit, limits).run();
}

PomsetSet enumerate_pomsets(const Alphabet& alphabet, std::size_t n, const Limits& limits) {
  const std::function<bool(const Pomset&)> all = [](const Pomset&) { return true; };
  PomsetSet out;
  for (auto& level : enumerate_pomsets_pruned(alphabet, n, all, limits)) {
    out.insert(level.begin(), level.end());
  }
  return out;
}

}  // namespace pomkit
