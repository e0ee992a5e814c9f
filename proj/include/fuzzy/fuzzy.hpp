#pragma once

#include "fuzzy/config.hpp"
#include "fuzzy/linalg.hpp"
#include "fuzzy/su2.hpp"
#include "fuzzy/random.hpp"
#include "fuzzy/dirac.hpp"
#include "fuzzy/states.hpp"
#include "fuzzy/distance.hpp"
#include "fuzzy/convergence.hpp"
#include "fuzzy/solver.hpp"
#include "fuzzy/verify.hpp"
