#pragma once

#include "pathsum/big_count.hpp"
#include "pathsum/combinatorics.hpp"
#include "pathsum/core.hpp"
#include "pathsum/ensemble.hpp"
#include "pathsum/errors.hpp"
#include "pathsum/kernel.hpp"
#include "pathsum/stats.hpp"
#include "pathsum/summation.hpp"
