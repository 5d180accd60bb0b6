#pragma once

// Reference implementations used only by the tests.  None of them reuse the
// library's canonical forms for the property they check.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pomkit/pomkit.hpp"

namespace oracle {

/// Finite labelled poset; less[i][j] means i is strictly below j.
struct Poset {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> less;

  std::size_t size() const { return labels.size(); }
};

Poset to_poset(const pomkit::Pomset& u);
bool isomorphic(const Poset& p, const Poset& q);
/// True iff p has no induced N (a<c, b<c, b<d and no other relation among them).
bool n_free(const Poset& p);
/// Depth read off the comparability graph: a disconnected comparability
/// graph is a parallel split, a disconnected incomparability graph a
/// sequential one.
std::size_t depth(const Poset& p);

/// Number of isomorphism classes of N-free labelled posets with exactly k
/// elements over `alphabet`, for each k <= n.
std::vector<std::size_t> count_sp_classes(const std::vector<std::string>& alphabet, std::size_t n);

/// Membership of u in the language of e by direct search over splits.
bool member(const pomkit::Expr& e, const pomkit::Pomset& u);
/// Every pomset over `alphabet` of size at most n accepted by member().
pomkit::PomsetSet language(const pomkit::Expr& e, const pomkit::Alphabet& alphabet, std::size_t n);

/// Trace relation of an automaton, computed by applying the four trace rules
/// to a table of (source, pomset, target) triples until nothing changes.
/// Targets equal to bottom are not recorded.
class Traces {
 public:
  Traces(const pomkit::PomsetAutomaton& a, const pomkit::Alphabet& alphabet, std::size_t n);

  const std::set<std::pair<std::size_t, std::size_t>>& pairs(const pomkit::Pomset& u) const;
  bool accepts(pomkit::State q, const pomkit::Pomset& u) const;
  pomkit::PomsetSet language(pomkit::State q) const;
  const pomkit::PomsetSet& universe() const { return universe_; }

 private:
  const pomkit::PomsetAutomaton& a_;
  pomkit::PomsetSet universe_;
  std::map<pomkit::Pomset, std::set<std::pair<std::size_t, std::size_t>>> table_;
};

/// Test seed: POMKIT_SEED from the environment, or `fallback`.
std::uint64_t seed(std::uint64_t fallback = 20240611);

/// Non-comment, non-blank lines of a file under the data directory.
std::vector<std::string> read_lines(const std::string& relative);
std::string data_path(const std::string& relative);

}  // namespace oracle
