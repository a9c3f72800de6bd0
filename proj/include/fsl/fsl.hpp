// SPDX-License-Identifier: MIT
#pragma once

#include "fsl/energy.hpp"
#include "fsl/funcrep.hpp"
#include "fsl/ladder.hpp"
#include "fsl/levy.hpp"
#include "fsl/scalecap.hpp"
