#pragma once

/**
 * Umbrella header: twisted cellular cohomology over finite simplicial
 * complexes (exact rational and certified floating backends), mapping-torus
 * vanishing checks, the spectral model of twisted torus cohomology, the
 * locally conformally Kaehler geometry of diagonal Hopf manifolds, and the
 * rational deformation of their Lee classes.
 */

#include "mnlck/cochain.hpp"
#include "mnlck/deformation.hpp"
#include "mnlck/exterior.hpp"
#include "mnlck/hopf.hpp"
#include "mnlck/io_json.hpp"
#include "mnlck/linalg.hpp"
#include "mnlck/mapping_torus.hpp"
#include "mnlck/parallel.hpp"
#include "mnlck/polynomial.hpp"
#include "mnlck/rational.hpp"
#include "mnlck/rng.hpp"
#include "mnlck/selftest.hpp"
#include "mnlck/simplicial_complex.hpp"
#include "mnlck/spectral.hpp"
#include "mnlck/spectral_harmonic.hpp"
#include "mnlck/triangulations.hpp"
#include "mnlck/twisted.hpp"
#include "mnlck/version.hpp"
