#pragma once

// Umbrella header for the conditional-independence toolkit.

#include "cikit/bits.hpp"
#include "cikit/claims.hpp"
#include "cikit/gaussian.hpp"
#include "cikit/graph.hpp"
#include "cikit/ground_set.hpp"
#include "cikit/markov.hpp"
#include "cikit/parallel.hpp"
#include "cikit/populations.hpp"
#include "cikit/prng.hpp"
#include "cikit/relation.hpp"
#include "cikit/report.hpp"
#include "cikit/rules.hpp"
#include "cikit/text_io.hpp"
#include "cikit/triple.hpp"
