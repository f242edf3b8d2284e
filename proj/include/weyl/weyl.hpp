#pragma once

#include "weyl/algebra.hpp"
#include "weyl/automorphism.hpp"
#include "weyl/centralizer.hpp"
#include "weyl/certify.hpp"
#include "weyl/errors.hpp"
#include "weyl/expr.hpp"
#include "weyl/factor.hpp"
#include "weyl/linalg.hpp"
#include "weyl/poly.hpp"
#include "weyl/rat.hpp"
#include "weyl/ratfunc.hpp"
#include "weyl/serialize.hpp"
#include "weyl/sweep.hpp"
