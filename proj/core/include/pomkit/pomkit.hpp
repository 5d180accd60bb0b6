#pragma once

#include "pomkit/automaton.hpp"
#include "pomkit/errors.hpp"
#include "pomkit/expr.hpp"
#include "pomkit/extraction.hpp"
#include "pomkit/grammar.hpp"
#include "pomkit/limits.hpp"
#include "pomkit/pomset.hpp"
#include "pomkit/random.hpp"
#include "pomkit/relation.hpp"
#include "pomkit/syntactic.hpp"
