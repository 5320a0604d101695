#pragma once

// Core library. JSON I/O (odolab/io.hpp) and the command-line front end
// (odolab/cli.hpp) are separate because they pull in nlohmann/json and CLI11.

#include "odolab/builtin.hpp"
#include "odolab/cohomology.hpp"
#include "odolab/dual_group.hpp"
#include "odolab/error.hpp"
#include "odolab/fredholm.hpp"
#include "odolab/harmonic.hpp"
#include "odolab/ktheory.hpp"
#include "odolab/length.hpp"
#include "odolab/level_function.hpp"
#include "odolab/linalg.hpp"
#include "odolab/odometer.hpp"
#include "odolab/rational.hpp"
#include "odolab/sampling.hpp"
#include "odolab/supernatural.hpp"
