#pragma once

#include "cf.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "numerics.hpp"
#include "poly.hpp"
#include "sequences.hpp"
#include "series.hpp"
#include "series2cf.hpp"
#include "transform.hpp"
