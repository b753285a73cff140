#pragma once

#include "errors.hpp"
#include "series.hpp"
#include "expr.hpp"
#include "parallel.hpp"
#include "circle_search.hpp"
#include "boundary.hpp"
#include "theorems.hpp"
#include "jack.hpp"
#include "io.hpp"
#include "report.hpp"
