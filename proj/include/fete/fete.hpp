#pragma once

#include "fete/chebyshev.hpp"
#include "fete/lu.hpp"
#include "fete/matrix.hpp"
#include "fete/matrix_io.hpp"
#include "fete/mesh.hpp"
#include "fete/oracles.hpp"
#include "fete/propagator.hpp"
#include "fete/study.hpp"
