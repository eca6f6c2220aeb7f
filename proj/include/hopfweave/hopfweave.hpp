#pragma once

#include "canonical_form.hpp"
#include "expression.hpp"
#include "grothendieck.hpp"
#include "int_matrix.hpp"
#include "integer.hpp"
#include "json_io.hpp"
#include "laurent_polynomial.hpp"
#include "linear_algebra.hpp"
#include "plane_fields.hpp"
#include "plumbing.hpp"
#include "search.hpp"
