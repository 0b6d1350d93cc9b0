#pragma once

#include "peakpoly/binomial_poly.hpp"
#include "peakpoly/integer.hpp"
#include "peakpoly/oracle.hpp"
#include "peakpoly/peak_core.hpp"
#include "peakpoly/peak_set.hpp"
#include "peakpoly/rational_poly.hpp"
#include "peakpoly/roots.hpp"
