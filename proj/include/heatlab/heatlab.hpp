// SPDX-License-Identifier: Apache-2.0
#ifndef HEATLAB_HEATLAB_HPP
#define HEATLAB_HEATLAB_HPP

#include "heatlab/asymptotics.hpp"
#include "heatlab/errors.hpp"
#include "heatlab/expansion.hpp"
#include "heatlab/fit.hpp"
#include "heatlab/gamma.hpp"
#include "heatlab/heattrace.hpp"
#include "heatlab/models.hpp"
#include "heatlab/specfun.hpp"
#include "heatlab/spectra.hpp"
#include "heatlab/theta.hpp"
#include "heatlab/util.hpp"
#include "heatlab/verify.hpp"

#endif  // HEATLAB_HEATLAB_HPP
