#pragma once

// Umbrella header.

#include "toprec/catalog.hpp"
#include "toprec/curve.hpp"
#include "toprec/errors.hpp"
#include "toprec/extract.hpp"
#include "toprec/graphs.hpp"
#include "toprec/json_io.hpp"
#include "toprec/kernel.hpp"
#include "toprec/multiform.hpp"
#include "toprec/rational.hpp"
#include "toprec/recursion.hpp"
#include "toprec/series.hpp"
#include "toprec/suite.hpp"
#include "toprec/upoly.hpp"
