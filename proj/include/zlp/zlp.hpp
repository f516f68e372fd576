#pragma once

// Umbrella header.

#include "census.hpp"
#include "error.hpp"
#include "field.hpp"
#include "integer.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "order.hpp"
#include "pascal.hpp"
#include "selftest.hpp"
#include "spectral.hpp"
