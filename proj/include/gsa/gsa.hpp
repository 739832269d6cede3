#pragma once

#include "gsa/automata.hpp"
#include "gsa/decompose.hpp"
#include "gsa/json_io.hpp"
#include "gsa/matrix.hpp"
#include "gsa/rational.hpp"
#include "gsa/source.hpp"
