// SPDX-License-Identifier: MIT
#pragma once

#include "fsl/ladder/arms.hpp"
#include "fsl/ladder/decompose.hpp"
#include "fsl/ladder/erased.hpp"
#include "fsl/ladder/experiments.hpp"
#include "fsl/ladder/star.hpp"
