#pragma once

#include "assocalg/errors.hpp"
#include "assocalg/scalar.hpp"
#include "assocalg/matrix.hpp"
#include "assocalg/random.hpp"
#include "assocalg/algebra.hpp"
#include "assocalg/expr.hpp"
#include "assocalg/invariants.hpp"
#include "assocalg/morphisms.hpp"
#include "assocalg/catalog.hpp"
