#ifndef DUALQKD_DUALQKD_HPP
#define DUALQKD_DUALQKD_HPP

#include "dualqkd/bb84.hpp"
#include "dualqkd/core.hpp"
#include "dualqkd/decoy.hpp"
#include "dualqkd/gmcs.hpp"
#include "dualqkd/practical.hpp"
#include "dualqkd/presets.hpp"
#include "dualqkd/scenario.hpp"
#include "dualqkd/sweep.hpp"

#endif  // DUALQKD_DUALQKD_HPP
