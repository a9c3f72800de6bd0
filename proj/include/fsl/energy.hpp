// SPDX-License-Identifier: MIT
#pragma once

#include "fsl/energy/erased_bound.hpp"
#include "fsl/energy/fourier_energy.hpp"
#include "fsl/energy/gagliardo.hpp"
#include "fsl/energy/hardy.hpp"
#include "fsl/energy/kernel.hpp"
#include "fsl/energy/report.hpp"
