#pragma once

#include "kronecker/errors.hpp"
#include "kronecker/numeric.hpp"
#include "kronecker/sequences.hpp"
#include "kronecker/roots.hpp"
#include "kronecker/exact_matrix.hpp"
#include "kronecker/linear_system.hpp"
#include "kronecker/reps.hpp"
#include "kronecker/bricks.hpp"
#include "kronecker/components.hpp"
#include "kronecker/rep_json.hpp"
#include "kronecker/verify.hpp"
