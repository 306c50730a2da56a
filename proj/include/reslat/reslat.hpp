#ifndef RESLAT_RESLAT_HPP
#define RESLAT_RESLAT_HPP

// Umbrella header: the whole library.

#include "reslat/algebra.hpp"
#include "reslat/boolean_center.hpp"
#include "reslat/enumerate.hpp"
#include "reslat/filters.hpp"
#include "reslat/fixtures.hpp"
#include "reslat/io.hpp"
#include "reslat/laws.hpp"
#include "reslat/morphism.hpp"
#include "reslat/products.hpp"
#include "reslat/quotient.hpp"

#endif  // RESLAT_RESLAT_HPP
