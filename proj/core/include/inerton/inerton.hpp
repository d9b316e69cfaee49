#pragma once

#include "inerton/dynamics.hpp"
#include "inerton/errors.hpp"
#include "inerton/mechanics.hpp"
#include "inerton/model.hpp"
#include "inerton/phase.hpp"
#include "inerton/quantization.hpp"
#include "inerton/trajectory.hpp"
