#pragma once

#include "unfriendly/ball_measure.hpp"
#include "unfriendly/coloring.hpp"
#include "unfriendly/dynamics.hpp"
#include "unfriendly/experiment.hpp"
#include "unfriendly/generate.hpp"
#include "unfriendly/graph.hpp"
#include "unfriendly/measure.hpp"
#include "unfriendly/oracle.hpp"
#include "unfriendly/rational.hpp"
#include "unfriendly/schedule.hpp"
