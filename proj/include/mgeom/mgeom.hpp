#pragma once

#include "mgeom/algebra.hpp"
#include "mgeom/errors.hpp"
#include "mgeom/flows.hpp"
#include "mgeom/geometry.hpp"
#include "mgeom/kernels.hpp"
#include "mgeom/linalg.hpp"
#include "mgeom/matrix.hpp"
#include "mgeom/matrix_io.hpp"
#include "mgeom/poisson.hpp"
#include "mgeom/properties.hpp"
#include "mgeom/random.hpp"
#include "mgeom/spectral.hpp"
