#pragma once

// Umbrella header.

#include "gcl/gf.hpp"
#include "gcl/cyclo.hpp"
#include "gcl/operator.hpp"
#include "gcl/symplectic.hpp"
#include "gcl/heisenberg.hpp"
#include "gcl/clifford.hpp"
#include "gcl/spectra.hpp"
#include "gcl/sic.hpp"
#include "gcl/mub.hpp"
#include "gcl/verify.hpp"
