#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numeric>
#include <stdexcept>

#ifndef POMKIT_TEST_DATA_DIR
#error "POMKIT_TEST_DATA_DIR must be defined"
#endif

namespace oracle {

using namespace pomkit;

namespace {

Poset disjoint(const Poset& p, const Poset& q, bool ordered) {
  Poset out;
  const std::size_t n = p.size() + q.size();
  out.labels = p.labels;
  out.labels.insert(out.labels.end(), q.labels.begin(), q.labels.end());
  out.less.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) out.less[i][j] = p.less[i][j];
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) out.less[p.size() + i][p.size() + j] = q.less[i][j];
  }
  if (ordered) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = 0; j < q.size(); ++j) out.less[i][p.size() + j] = true;
    }
  }
  return out;
}

Poset induced(const Poset& p, const std::vector<std::size_t>& keep) {
  Poset out;
  for (std::size_t i : keep) out.labels.push_back(p.labels[i]);
  out.less.assign(keep.size(), std::vector<bool>(keep.size(), false));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) out.less[i][j] = p.less[keep[i]][keep[j]];
  }
  return out;
}

std::vector<std::vector<std::size_t>> components(const Poset& p, bool comparable) {
  const std::size_t n = p.size();
  std::vector<std::size_t> comp(n, n);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    std::vector<std::size_t> todo{s}, members;
    comp[s] = out.size();
    while (!todo.empty()) {
      std::size_t x = todo.back();
      todo.pop_back();
      members.push_back(x);
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x || comp[y] != n) continue;
        const bool rel = p.less[x][y] || p.less[y][x];
        if (rel == comparable) {
          comp[y] = out.size();
          todo.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

using Key = std::pair<std::vector<std::string>, std::vector<bool>>;

Key encode(const Poset& p, const std::vector<std::size_t>& perm) {
  Key k;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) k.first.push_back(p.labels[perm[i]]);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) k.second.push_back(p.less[perm[i]][perm[j]]);
  }
  return k;
}

Key canonical_key(const Poset& p) {
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  Key best = encode(p, perm);
  while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, encode(p, perm));
  return best;
}

std::vector<std::pair<Pomset, Pomset>> seq_splits(const Pomset& u) {
  std::vector<std::pair<Pomset, Pomset>> out;
  if (u.kind() != Pomset::Kind::Seq) {
    out.emplace_back(Pomset::empty(), u);
    if (!u.is_empty()) out.emplace_back(u, Pomset::empty());
    return out;
  }
  auto parts = u.parts();
  for (std::size_t i = 0; i <= parts.size(); ++i) {
    out.emplace_back(seq_of(parts.subspan(0, i)), seq_of(parts.subspan(i)));
  }
  return out;
}

std::vector<std::pair<Pomset, Pomset>> par_splits(const Pomset& u) {
  std::vector<std::pair<Pomset, Pomset>> out;
  if (u.kind() != Pomset::Kind::Par) {
    out.emplace_back(Pomset::empty(), u);
    if (!u.is_empty()) out.emplace_back(u, Pomset::empty());
    return out;
  }
  auto parts = u.parts();
  for (std::uint32_t mask = 0; mask < (1U << parts.size()); ++mask) {
    std::vector<Pomset> l, r;
    for (std::size_t i = 0; i < parts.size(); ++i) (mask >> i & 1U ? l : r).push_back(parts[i]);
    out.emplace_back(par_of(l), par_of(r));
  }
  return out;
}

}  // namespace

Poset to_poset(const Pomset& u) {
  switch (u.kind()) {
    case Pomset::Kind::Empty:
      return {};
    case Pomset::Kind::Prim:
      return {{u.letter().name()}, {{false}}};
    default: {
      Poset acc;
      for (const auto& part : u.parts()) {
        acc = disjoint(acc, to_poset(part), u.kind() == Pomset::Kind::Seq);
      }
      return acc;
    }
  }
}

bool isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return false;
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i < p.size(); ++i) {
      if (p.labels[i] != q.labels[perm[i]]) ok = false;
      for (std::size_t j = 0; ok && j < p.size(); ++j) {
        if (p.less[i][j] != q.less[perm[i]][perm[j]]) ok = false;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool n_free(const Poset& p) {
  const std::size_t n = p.size();
  auto rel = [&](std::size_t x, std::size_t y) { return p.less[x][y] || p.less[y][x]; };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          if (p.less[a][c] && p.less[b][c] && p.less[b][d] && !rel(a, b) && !rel(a, d) &&
              !rel(c, d)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

std::size_t depth(const Poset& p) {
  if (p.size() <= 1) return p.size();
  for (bool comparable : {true, false}) {
    auto comps = components(p, comparable);
    if (comps.size() > 1) {
      std::size_t d = 0;
      for (const auto& c : comps) d = std::max(d, depth(induced(p, c)));
      return d + 1;
    }
  }
  throw std::logic_error("poset is not series-parallel");
}

std::vector<std::size_t> count_sp_classes(const std::vector<std::string>& alphabet, std::size_t n) {
  std::vector<std::size_t> counts;
  for (std::size_t k = 0; k <= n; ++k) {
    // Every poset has a linear extension, so orders compatible with 0 < 1 < ... < k-1 suffice.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) slots.emplace_back(i, j);
    }
    std::set<Key> classes;
    for (std::uint32_t mask = 0; mask < (1U << slots.size()); ++mask) {
      Poset p;
      p.labels.assign(k, alphabet.front());
      p.less.assign(k, std::vector<bool>(k, false));
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (mask >> s & 1U) p.less[slots[s].first][slots[s].second] = true;
      }
      bool transitive = true;
      for (std::size_t x = 0; transitive && x < k; ++x) {
        for (std::size_t y = 0; transitive && y < k; ++y) {
          for (std::size_t z = 0; transitive && z < k; ++z) {
            if (p.less[x][y] && p.less[y][z] && !p.less[x][z]) transitive = false;
          }
        }
      }
      if (!transitive || !n_free(p)) continue;
      std::size_t labelings = 1;
      for (std::size_t i = 0; i < k; ++i) labelings *= alphabet.size();
      for (std::size_t code = 0; code < labelings; ++code) {
        p.labels.clear();
        for (std::size_t i = 0, c = code; i < k; ++i, c /= alphabet.size()) {
          p.labels.push_back(alphabet[c % alphabet.size()]);
        }
        classes.insert(canonical_key(p));
      }
    }
    counts.push_back(classes.size());
  }
  return counts;
}

bool member(const Expr& e, const Pomset& u) {
  switch (e.kind()) {
    case Expr::Kind::Zero:
      return false;
    case Expr::Kind::One:
      return u.is_empty();
    case Expr::Kind::Lit:
      return u.kind() == Pomset::Kind::Prim && u.letter() == e.letter();
    case Expr::Kind::Plus:
      return member(e.left(), u) || member(e.right(), u);
    case Expr::Kind::Dot:
      for (const auto& [v, w] : seq_splits(u)) {
        if (member(e.left(), v) && member(e.right(), w)) return true;
      }
      return false;
    case Expr::Kind::Par:
      for (const auto& [v, w] : par_splits(u)) {
        if (member(e.left(), v) && member(e.right(), w)) return true;
      }
      return false;
    case Expr::Kind::Star:
    case Expr::Kind::Dagger: {
      if (u.is_empty()) return true;
      const bool seq = e.kind() == Expr::Kind::Star;
      for (const auto& [v, w] : seq ? seq_splits(u) : par_splits(u)) {
        if (!v.is_empty() && member(e.body(), v) && member(e, w)) return true;
      }
      return false;
    }
  }
  return false;
}

PomsetSet language(const Expr& e, const Alphabet& alphabet, std::size_t n) {
  PomsetSet out;
  for (const auto& u : enumerate_pomsets(alphabet, n)) {
    if (member(e, u)) out.insert(u);
  }
  return out;
}

Traces::Traces(const PomsetAutomaton& a, const Alphabet& alphabet, std::size_t n) : a_(a) {
  Alphabet sigma = alphabet;
  for (const auto& l : a.alphabet()) sigma.insert(l);
  universe_ = enumerate_pomsets(sigma, n);
  const std::size_t bot = a.bottom().index();
  auto add = [&](std::size_t q, const Pomset& u, std::size_t t) {
    if (t == bot) return false;
    return table_[u].emplace(q, t).second;
  };
  for (State q : a.states()) {
    add(q.index(), Pomset::empty(), q.index());
    for (const auto& l : sigma) add(q.index(), Pomset::prim(l), a.delta(q, l).index());
  }
  for (bool changed = true; changed;) {
    changed = false;
    auto snapshot = table_;
    for (const auto& [v, rv] : snapshot) {
      for (const auto& [w, rw] : snapshot) {
        if (v.size() + w.size() > n) continue;
        const Pomset vw = seq_compose(v, w);
        for (const auto& [q, q1] : rv) {
          for (const auto& [q1b, q2] : rw) {
            if (q1 == q1b) changed |= add(q, vw, q2);
          }
        }
        const Pomset vpw = par_compose(v, w);
        for (const auto& [r, r1] : rv) {
          if (!a.accepting(State(r1))) continue;
          for (const auto& [s, s1] : rw) {
            if (!a.accepting(State(s1))) continue;
            for (State q : a.states()) {
              changed |= add(q.index(), vpw, a.gamma(q, State(r), State(s)).index());
            }
          }
        }
      }
    }
  }
}

const std::set<std::pair<std::size_t, std::size_t>>& Traces::pairs(const Pomset& u) const {
  static const std::set<std::pair<std::size_t, std::size_t>> none;
  auto it = table_.find(u);
  return it == table_.end() ? none : it->second;
}

bool Traces::accepts(State q, const Pomset& u) const {
  for (const auto& [src, dst] : pairs(u)) {
    if (src == q.index() && a_.accepting(State(dst))) return true;
  }
  return false;
}

PomsetSet Traces::language(State q) const {
  PomsetSet out;
  for (const auto& u : universe_) {
    if (accepts(q, u)) out.insert(u);
  }
  return out;
}

std::uint64_t seed(std::uint64_t fallback) {
  if (const char* s = std::getenv("POMKIT_SEED")) return std::strtoull(s, nullptr, 10);
  return fallback;
}

std::string data_path(const std::string& relative) {
  return std::string(POMKIT_TEST_DATA_DIR) + "/" + relative;
}

std::vector<std::string> read_lines(const std::string& relative) {
  std::ifstream in(data_path(relative));
  if (!in) throw std::runtime_error("cannot open " + data_path(relative));
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

}  // namespace oracle
