#pragma once

#include "floatcyl/params.hpp"
#include "floatcyl/model.hpp"
#include "floatcyl/profile.hpp"
#include "floatcyl/equilibria.hpp"
#include "floatcyl/asymptotics.hpp"
#include "floatcyl/intersection.hpp"
#include "floatcyl/regions.hpp"
#include "floatcyl/oracles.hpp"
