#pragma once

// Umbrella header: exact partition calculus — partitions, hook statistics,
// difference operators, corner formulas, and the identity verification suite.

#include "partcalc/corners.hpp"
#include "partcalc/diffops.hpp"
#include "partcalc/hookstats.hpp"
#include "partcalc/partition.hpp"
#include "partcalc/polynomial.hpp"
#include "partcalc/power_sums.hpp"
#include "partcalc/rational.hpp"
#include "partcalc/report.hpp"
#include "partcalc/series.hpp"
#include "partcalc/tableaux.hpp"
#include "partcalc/verify.hpp"
