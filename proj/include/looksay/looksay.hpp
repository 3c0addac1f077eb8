#pragma once

#include "looksay/cosmology.hpp"
#include "looksay/descriptors.hpp"
#include "looksay/digit_string.hpp"
#include "looksay/errors.hpp"
#include "looksay/fixed_points.hpp"
#include "looksay/growth.hpp"
#include "looksay/particles.hpp"
#include "looksay/spectral.hpp"
#include "looksay/splitter.hpp"
#include "looksay/step.hpp"
