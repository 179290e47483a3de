#pragma once

#include "error.hpp"
#include "truthspace.hpp"
#include "measures.hpp"
#include "connectives.hpp"
#include "closure.hpp"
#include "format.hpp"
#include "program.hpp"
#include "solver.hpp"
#include "oracle.hpp"
#include "table.hpp"
#include "expression.hpp"
