#pragma once

#include "cjsp/annealing.hpp"
#include "cjsp/bench.hpp"
#include "cjsp/cyclic.hpp"
#include "cjsp/error.hpp"
#include "cjsp/gantt.hpp"
#include "cjsp/instance.hpp"
#include "cjsp/schedule.hpp"
#include "cjsp/schedule_json.hpp"
