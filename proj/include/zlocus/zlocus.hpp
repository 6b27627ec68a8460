#pragma once

// Convenience header: the whole library.

#include "zlocus/error.hpp"

#include "zlocus/algebra/gaussian_rational.hpp"
#include "zlocus/algebra/poly.hpp"
#include "zlocus/algebra/poly_matrix.hpp"
#include "zlocus/algebra/poly_ring.hpp"

#include "zlocus/groebner/ideal.hpp"

#include "zlocus/constructible/constructible_set.hpp"

#include "zlocus/zerolocus/random_presentation.hpp"
#include "zlocus/zerolocus/zero_locus.hpp"

#include "zlocus/infinitesimal/quadric_example.hpp"
#include "zlocus/infinitesimal/tangent_system.hpp"

#include "zlocus/cli/json_io.hpp"
#include "zlocus/cli/poly_text.hpp"
