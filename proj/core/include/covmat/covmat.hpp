#pragma once

// Umbrella header.
#include "covmat/concurrence.hpp"
#include "covmat/covariance.hpp"
#include "covmat/criteria.hpp"
#include "covmat/error.hpp"
#include "covmat/linalg.hpp"
#include "covmat/observables.hpp"
#include "covmat/state_io.hpp"
#include "covmat/state_spec.hpp"
#include "covmat/states.hpp"
