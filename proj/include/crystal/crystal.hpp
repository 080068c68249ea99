#pragma once

#include "crystal/lattice.hpp"
#include "crystal/lattice_io.hpp"
#include "crystal/monomial.hpp"
#include "crystal/groebner.hpp"
#include "crystal/homology.hpp"
#include "crystal/betti.hpp"
#include "crystal/verify.hpp"
#include "crystal/serialize.hpp"
