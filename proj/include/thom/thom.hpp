#pragma once

// Umbrella header: integer homology of pointed sets over free partially
// commutative monoids M(E,I), plus the decomposition-theorem harness.

#include "thom/errors.hpp"
#include "thom/intlinalg.hpp"
#include "thom/alphabet.hpp"
#include "thom/action.hpp"
#include "thom/simplicial.hpp"
#include "thom/chain_complex.hpp"
#include "thom/homology.hpp"
#include "thom/verify.hpp"
