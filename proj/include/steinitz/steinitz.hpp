#pragma once

#include "steinitz/affine.hpp"
#include "steinitz/descriptor_io.hpp"
#include "steinitz/errors.hpp"
#include "steinitz/exponent.hpp"
#include "steinitz/fgset.hpp"
#include "steinitz/field.hpp"
#include "steinitz/finite_ring.hpp"
#include "steinitz/predict.hpp"
#include "steinitz/primes.hpp"
#include "steinitz/subring_lattice.hpp"
#include "steinitz/supernatural.hpp"
#include "steinitz/verify.hpp"
