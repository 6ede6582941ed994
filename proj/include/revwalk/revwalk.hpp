#pragma once

// Everything in one include.

#include "revwalk/error.hpp"
#include "revwalk/rng.hpp"
#include "revwalk/parallel.hpp"
#include "revwalk/lattice.hpp"
#include "revwalk/numerics.hpp"
#include "revwalk/kernels.hpp"
#include "revwalk/ladder_law.hpp"
#include "revwalk/return_prob.hpp"
#include "revwalk/walk_sim.hpp"
#include "revwalk/continuous.hpp"
#include "revwalk/stats.hpp"
#include "revwalk/enumerate.hpp"
#include "revwalk/io.hpp"
#include "revwalk/acceptance.hpp"
