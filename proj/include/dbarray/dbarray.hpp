// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "array.hpp"
#include "arraycode.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "folding.hpp"
#include "gf2poly.hpp"
#include "lfsr.hpp"
#include "sequence.hpp"
#include "wide_poly.hpp"
