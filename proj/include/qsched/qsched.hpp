#pragma once

#include "qsched/calibration.hpp"
#include "qsched/collision.hpp"
#include "qsched/config.hpp"
#include "qsched/csv.hpp"
#include "qsched/demand.hpp"
#include "qsched/device.hpp"
#include "qsched/errors.hpp"
#include "qsched/experiment.hpp"
#include "qsched/model.hpp"
#include "qsched/rng.hpp"
#include "qsched/schedule.hpp"
#include "qsched/solvers.hpp"
#include "qsched/transforms.hpp"
