#pragma once

// Umbrella header for the Sheffer-Dunkl library.

#include "dunkl/errors.hpp"
#include "dunkl/gamma.hpp"
#include "dunkl/json_io.hpp"
#include "dunkl/moments.hpp"
#include "dunkl/numeric.hpp"
#include "dunkl/poly.hpp"
#include "dunkl/rational.hpp"
#include "dunkl/series.hpp"
#include "dunkl/sheffer.hpp"
