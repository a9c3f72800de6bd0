// SPDX-License-Identifier: MIT
#pragma once

#include "fsl/scalecap/capacity.hpp"
#include "fsl/scalecap/compose.hpp"
#include "fsl/scalecap/fat_cantor.hpp"
#include "fsl/scalecap/measure.hpp"
#include "fsl/scalecap/properness.hpp"
#include "fsl/scalecap/scale.hpp"
