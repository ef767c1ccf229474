#pragma once

#include "kgonal/exactmath.hpp"
#include "kgonal/figurate.hpp"
#include "kgonal/intersect.hpp"
#include "kgonal/oracle.hpp"
#include "kgonal/pell.hpp"
