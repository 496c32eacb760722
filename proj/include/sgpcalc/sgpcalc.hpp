#pragma once

// Umbrella header: exact arithmetic for numerical semigroups, their
// fractional ideals, ring invariants, ideal classification, the built-in
// claim catalog, and the corpus search driver.

#include "errors.hpp"
#include "semigroup.hpp"
#include "ideal.hpp"
#include "invariants.hpp"
#include "classify.hpp"
#include "propositions.hpp"
#include "enumerate.hpp"
#include "parse.hpp"
#include "json_io.hpp"
#include "search.hpp"
