#pragma once

#include "fockvar/error.hpp"
#include "fockvar/expression.hpp"
#include "fockvar/exponents.hpp"
#include "fockvar/quadrature.hpp"
#include "fockvar/functions.hpp"
#include "fockvar/modular.hpp"
#include "fockvar/operators.hpp"
#include "fockvar/io.hpp"
#include "fockvar/suites.hpp"
