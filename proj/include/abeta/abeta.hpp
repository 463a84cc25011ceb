#ifndef ABETA_ABETA_HPP
#define ABETA_ABETA_HPP

// Umbrella header for the numerical library (the CLI front end is separate:
// include abeta/cli.hpp).

#include "abeta/beta.hpp"
#include "abeta/bounds.hpp"
#include "abeta/errors.hpp"
#include "abeta/extremal.hpp"
#include "abeta/parallel.hpp"
#include "abeta/quadrature.hpp"
#include "abeta/radii.hpp"
#include "abeta/root_finding.hpp"
#include "abeta/series.hpp"
#include "abeta/verify.hpp"

#endif  // ABETA_ABETA_HPP
