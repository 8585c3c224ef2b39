#pragma once

#include "coverforge/error.hpp"
#include "coverforge/ring/concepts.hpp"
#include "coverforge/ring/localized.hpp"
#include "coverforge/ring/matrix.hpp"
#include "coverforge/ring/parse.hpp"
#include "coverforge/ring/poly.hpp"
#include "coverforge/ring/quotient.hpp"
#include "coverforge/ring/scalar.hpp"
#include "coverforge/ring/snf.hpp"
