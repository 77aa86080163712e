#pragma once

#include "starq/checks.hpp"
#include "starq/dissipation.hpp"
#include "starq/eigensystem.hpp"
#include "starq/errors.hpp"
#include "starq/exp_poly.hpp"
#include "starq/fock_matrix.hpp"
#include "starq/observables.hpp"
#include "starq/params.hpp"
#include "starq/phase_poly.hpp"
#include "starq/scaling.hpp"
#include "starq/star_product.hpp"
