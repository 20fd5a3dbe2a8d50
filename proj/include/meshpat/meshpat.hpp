#pragma once

#include "bijections.hpp"
#include "distribution.hpp"
#include "format.hpp"
#include "integer.hpp"
#include "permutation.hpp"
#include "tamari.hpp"
#include "triangles.hpp"
#include "verify.hpp"
