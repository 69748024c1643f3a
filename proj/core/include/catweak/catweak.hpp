#pragma once

#include "catweak/cat_state.hpp"
#include "catweak/displacement.hpp"
#include "catweak/errors.hpp"
#include "catweak/grid.hpp"
#include "catweak/stern_gerlach.hpp"
#include "catweak/weak_measurement.hpp"
#include "catweak/wigner.hpp"
