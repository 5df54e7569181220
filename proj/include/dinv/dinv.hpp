#ifndef DINV_DINV_HPP
#define DINV_DINV_HPP

#include "dinv/discretization.hpp"
#include "dinv/enumerate.hpp"
#include "dinv/identities.hpp"
#include "dinv/json_io.hpp"
#include "dinv/linalg.hpp"
#include "dinv/polynomial.hpp"
#include "dinv/rational.hpp"
#include "dinv/subspace.hpp"
#include "dinv/text.hpp"

#endif  // DINV_DINV_HPP
