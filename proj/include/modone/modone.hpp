#pragma once

// Local statistics of sequences mod one and their homogeneous-space limit
// laws: generators, exact window statistics, the SL(2,R) x| R^2 counting
// function with Haar sampling, random baselines and diophantine machinery.

#include "modone/diophantine.hpp"
#include "modone/empirical.hpp"
#include "modone/errors.hpp"
#include "modone/experiments.hpp"
#include "modone/group.hpp"
#include "modone/haar.hpp"
#include "modone/lattice_count.hpp"
#include "modone/local_stats.hpp"
#include "modone/orbit.hpp"
#include "modone/point_array.hpp"
#include "modone/rand_model.hpp"
#include "modone/rng.hpp"
#include "modone/stats_io.hpp"
#include "modone/stats_util.hpp"
#include "modone/test_function.hpp"
