#include <algorithm>

#include "pomkit/automaton.hpp"
#include "pomkit/errors.hpp"

namespace pomkit {

TraceEngine::TraceEngine(const PomsetAutomaton& automaton)
    : automaton_(automaton), final_((automaton.size() + 63) / 64, 0) {
  const std::size_t n = automaton.size();
  for (std::size_t q = 0; q < n; ++q) {
    if (automaton.accepting(State(q))) final_[q / 64] |= std::uint64_t{1} << (q % 64);
    for (const auto& [rs, t] : automaton.gamma_row(State(q))) {
      forks_.push_back({q, rs.first.index(), rs.second.index(), t.index()});
    }
  }
  // Traces labelled by the empty pomset: the trivial ones, closed under
  // composition and under forks whose branches both read the empty pomset.
  unit_ = Relation(n);
  for (std::size_t q = 0; q < n; ++q) {
    if (q != automaton.bottom().index()) unit_.set(q, q);
  }
  for (bool changed = true; changed;) {
    changed = unit_.merge(unit_.then(unit_));
    changed |= unit_.merge(fork(unit_, unit_));
  }
}

std::vector<std::uint64_t> TraceEngine::accepting_sources(const Relation& r) const {
  std::vector<std::uint64_t> out(final_.size(), 0);
  for (std::size_t q = 0; q < r.size(); ++q) {
    if (r.row_meets(q, final_)) out[q / 64] |= std::uint64_t{1} << (q % 64);
  }
  return out;
}

Relation TraceEngine::fork(const Relation& left, const Relation& right) const {
  auto l = accepting_sources(left);
  auto r = accepting_sources(right);
  auto has = [](const std::vector<std::uint64_t>& set, std::size_t i) {
    return (set[i / 64] >> (i % 64)) & 1U;
  };
  Relation out(automaton_.size());
  for (const auto& f : forks_) {
    if (has(l, f.r) && has(r, f.s)) out.set(f.q, f.t);
  }
  return out;
}

// Closes under padding with the empty pomset: 1.u.1, u||1 and 1||u all equal u.
void TraceEngine::close(Relation& r) const {
  for (bool changed = true; changed;) {
    changed = r.merge(unit_.then(r).then(unit_));
    changed |= r.merge(fork(r, unit_));
    changed |= r.merge(fork(unit_, r));
  }
}

Relation TraceEngine::compute(const Pomset& u) {
  const std::size_t n = automaton_.size();
  Relation r(n);
  switch (u.kind()) {
    case Pomset::Kind::Empty:
      return unit_;
    case Pomset::Kind::Prim:
      for (std::size_t q = 0; q < n; ++q) {
        State t = automaton_.delta(State(q), u.letter());
        if (t != automaton_.bottom()) r.set(q, t.index());
      }
      break;
    case Pomset::Kind::Seq: {
      auto parts = u.parts();
      for (std::size_t m = 1; m < parts.size(); ++m) {
        Pomset prefix = seq_of(parts.subspan(0, m));
        Pomset suffix = seq_of(parts.subspan(m));
        const Relation& lhs = relation(prefix);
        r.merge(lhs.then(relation(suffix)));
      }
      break;
    }
    case Pomset::Kind::Par: {
      // Enumerate sub-multisets V of the parts; W is the complement.
      auto parts = u.parts();
      std::vector<Pomset> distinct;
      std::vector<std::size_t> mult;
      for (const auto& p : parts) {
        if (!distinct.empty() && distinct.back() == p) {
          ++mult.back();
        } else {
          distinct.push_back(p);
          mult.push_back(1);
        }
      }
      std::vector<std::size_t> take(distinct.size(), 0);
      for (;;) {
        std::size_t i = 0;
        while (i < take.size() && take[i] == mult[i]) take[i++] = 0;
        if (i == take.size()) break;
        ++take[i];
        std::vector<Pomset> v, w;
        for (std::size_t k = 0; k < distinct.size(); ++k) {
          v.insert(v.end(), take[k], distinct[k]);
          w.insert(w.end(), mult[k] - take[k], distinct[k]);
        }
        if (w.empty()) continue;
        const Relation& rv = relation(par_of(v));
        r.merge(fork(rv, relation(par_of(w))));
      }
      break;
    }
  }
  close(r);
  return r;
}

const Relation& TraceEngine::relation(const Pomset& u) {
  if (auto it = memo_.find(u); it != memo_.end()) return it->second;
  Relation r = compute(u);
  return memo_.emplace(u, std::move(r)).first->second;
}

bool TraceEngine::accepts(State q, const Pomset& u) {
  return relation(u).row_meets(q.index(), final_);
}

PomsetSet TraceEngine::language_bounded(State q, std::size_t n, const Limits& limits) {
  const std::function<bool(const Pomset&)> admit = [this](const Pomset& u) {
    return !relation(u).empty();
  };
  PomsetSet out;
  for (const auto& level : enumerate_pomsets_pruned(automaton_.alphabet(), n, admit, limits)) {
    for (const auto& u : level) {
      if (accepts(q, u)) out.insert(u);
    }
  }
  return out;
}

bool accepts(const PomsetAutomaton& a, State q, const Pomset& u) {
  return TraceEngine(a).accepts(q, u);
}

PomsetSet language_bounded(const PomsetAutomaton& a, State q, std::size_t n,
                           const Limits& limits) {
  return TraceEngine(a).language_bounded(q, n, limits);
}

}  // namespace pomkit
