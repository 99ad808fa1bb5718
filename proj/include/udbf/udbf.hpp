#pragma once

#include "udbf/compare.hpp"
#include "udbf/damped_binomial.hpp"
#include "udbf/digital.hpp"
#include "udbf/frequency_analysis.hpp"
#include "udbf/io.hpp"
#include "udbf/noise.hpp"
#include "udbf/polynomial.hpp"
#include "udbf/polynomial_roots.hpp"
#include "udbf/reference_filters.hpp"
#include "udbf/transient.hpp"
