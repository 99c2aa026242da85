#pragma once

#include "ptsmc/control.hpp"
#include "ptsmc/dynamics.hpp"
#include "ptsmc/envelope.hpp"
#include "ptsmc/errors.hpp"
#include "ptsmc/integrator.hpp"
#include "ptsmc/observer.hpp"
#include "ptsmc/scenario.hpp"
#include "ptsmc/sliding.hpp"
#include "ptsmc/types.hpp"
