// SPDX-License-Identifier: MIT
#pragma once

#include "fsl/levy/energy.hpp"
#include "fsl/levy/symbol.hpp"
#include "fsl/levy/triplet.hpp"
