#pragma once

#include "primal/algebra.hpp"
#include "primal/classify.hpp"
#include "primal/dfa.hpp"
#include "primal/errors.hpp"
#include "primal/minimize.hpp"
#include "primal/polynomial.hpp"
#include "primal/presentation.hpp"
#include "primal/structure.hpp"
#include "primal/words.hpp"
