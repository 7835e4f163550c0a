#pragma once

#include "ncode/atlas.hpp"
#include "ncode/classify.hpp"
#include "ncode/code.hpp"
#include "ncode/complex.hpp"
#include "ncode/construct.hpp"
#include "ncode/decider.hpp"
#include "ncode/geometry.hpp"
#include "ncode/index_set.hpp"
#include "ncode/realization.hpp"
#include "ncode/report.hpp"
#include "ncode/topology.hpp"
#include "ncode/wheels.hpp"
