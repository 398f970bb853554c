#pragma once

// Umbrella header for the q-series / Askey-Wilson kernel library.

#include "qaw/checks.hpp"
#include "qaw/error.hpp"
#include "qaw/identities.hpp"
#include "qaw/kernels.hpp"
#include "qaw/params.hpp"
#include "qaw/polynomials.hpp"
#include "qaw/qpochhammer.hpp"
#include "qaw/quadrature.hpp"
#include "qaw/report.hpp"
#include "qaw/series.hpp"
#include "qaw/suite.hpp"
#include "qaw/types.hpp"
