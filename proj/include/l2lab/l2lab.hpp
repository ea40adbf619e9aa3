#pragma once

#include "l2lab/error.hpp"
#include "l2lab/numerics/precision.hpp"
#include "l2lab/numerics/real.hpp"
#include "l2lab/numerics/complex.hpp"
#include "l2lab/numerics/format.hpp"
#include "l2lab/numerics/quadratic.hpp"
#include "l2lab/numerics/special.hpp"
#include "l2lab/lfunctions.hpp"
#include "l2lab/modular/cm_point.hpp"
#include "l2lab/modular/eta.hpp"
#include "l2lab/modular/eisenstein.hpp"
#include "l2lab/modular/legendre.hpp"
#include "l2lab/modular/region.hpp"
#include "l2lab/epstein.hpp"
#include "l2lab/series/updown.hpp"
#include "l2lab/series/fibonacci.hpp"
#include "l2lab/series/sigma_gr.hpp"
#include "l2lab/series/tables.hpp"
#include "l2lab/identities/constants.hpp"
#include "l2lab/identities/corpus.hpp"
#include "l2lab/identities/verify.hpp"
