// Frozen per-expression sizes.  Set POMKIT_UPDATE_GOLDEN=1 to rewrite the table.

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"

using namespace pomkit;

namespace {

const std::string golden = std::string(POMKIT_GOLDEN_DIR) + "/corpus_sizes.tsv";

struct Row {
  std::size_t states;
  std::size_t extracted;
};

Row measure(const std::string& text) {
  Exploration x = explore(parse_expr(text));
  return {x.automaton.size(), pa_to_expr(x.automaton, x.start).tree_size()};
}

}  // namespace

TEST_CASE("corpus sizes match the golden table") {
  const auto corpus = oracle::read_lines("corpus.txt");
  if (std::getenv("POMKIT_UPDATE_GOLDEN")) {
    std::ofstream out(golden);
    out << "# expression\tstates\textracted tree size\n";
    for (const auto& e : corpus) {
      Row r = measure(e);
      out << e << '\t' << r.states << '\t' << r.extracted << '\n';
    }
    MESSAGE("rewrote " << golden);
    return;
  }
  std::ifstream in(golden);
  REQUIRE_MESSAGE(in.good(), "missing " << golden);
  std::map<std::string, Row> want;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string expr, states, extracted;
    std::getline(fields, expr, '\t');
    std::getline(fields, states, '\t');
    std::getline(fields, extracted, '\t');
    want[expr] = {std::stoul(states), std::stoul(extracted)};
  }
  CHECK(want.size() == corpus.size());
  for (const auto& e : corpus) {
    INFO(e);
    REQUIRE(want.contains(e));
    Row r = measure(e);
    CHECK(r.states == want[e].states);
    CHECK(r.extracted == want[e].extracted);
  }
}

TEST_CASE("explore(a*) has four states") {
  CHECK(explore(parse_expr("a*")).automaton.size() == 4);
}
