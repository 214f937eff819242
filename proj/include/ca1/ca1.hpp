// Umbrella header for the ca1 library.

#pragma once

#include <ca1/numeric.hpp>
#include <ca1/basket.hpp>
#include <ca1/rr.hpp>
#include <ca1/basket_enum.hpp>
#include <ca1/poly.hpp>
#include <ca1/action.hpp>
#include <ca1/wblowup.hpp>
#include <ca1/filtration.hpp>
#include <ca1/duval.hpp>
#include <ca1/catalog.hpp>
