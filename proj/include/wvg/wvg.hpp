#pragma once

// Umbrella header: the whole library.

#include "wvg/counting.hpp"
#include "wvg/error.hpp"
#include "wvg/game.hpp"
#include "wvg/generate.hpp"
#include "wvg/indices.hpp"
#include "wvg/json_io.hpp"
#include "wvg/limits.hpp"
#include "wvg/manipulation.hpp"
#include "wvg/numeric.hpp"
#include "wvg/random.hpp"
#include "wvg/reductions.hpp"
