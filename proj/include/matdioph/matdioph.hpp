#pragma once

#include "error.hpp"
#include "eval.hpp"
#include "json.hpp"
#include "matrix.hpp"
#include "ncpoly.hpp"
#include "number.hpp"
#include "reduce.hpp"
#include "search.hpp"
#include "unipoly.hpp"
#include "verify.hpp"
