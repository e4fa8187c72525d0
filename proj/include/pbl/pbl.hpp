#pragma once

// Umbrella header: the whole laboratory in one include.

#include "pbl/algebra.hpp"     // IWYU pragma: export
#include "pbl/errors.hpp"      // IWYU pragma: export
#include "pbl/filters.hpp"     // IWYU pragma: export
#include "pbl/fuzzy.hpp"       // IWYU pragma: export
#include "pbl/harness.hpp"     // IWYU pragma: export
#include "pbl/implication.hpp" // IWYU pragma: export
#include "pbl/interval.hpp"    // IWYU pragma: export
#include "pbl/rational.hpp"    // IWYU pragma: export
