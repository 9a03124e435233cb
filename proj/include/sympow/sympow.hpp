#pragma once

#include "sympow/containment.hpp"
#include "sympow/dump.hpp"
#include "sympow/errors.hpp"
#include "sympow/field.hpp"
#include "sympow/groebner.hpp"
#include "sympow/ideal.hpp"
#include "sympow/intprog.hpp"
#include "sympow/invariants.hpp"
#include "sympow/matrix.hpp"
#include "sympow/monomial.hpp"
#include "sympow/polynomial.hpp"
#include "sympow/profile.hpp"
#include "sympow/rational.hpp"
#include "sympow/ring.hpp"
#include "sympow/varieties.hpp"
