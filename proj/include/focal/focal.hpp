#pragma once

#include "focal/certify.hpp"
#include "focal/counter_rng.hpp"
#include "focal/dual.hpp"
#include "focal/errors.hpp"
#include "focal/focal_engine.hpp"
#include "focal/homog_poly.hpp"
#include "focal/poly_system.hpp"
#include "focal/prime_field.hpp"
#include "focal/rational.hpp"
#include "focal/ring.hpp"
#include "focal/search.hpp"
#include "focal/sparse_poly.hpp"
#include "focal/symbolic.hpp"
#include "focal/system_file.hpp"
#include "focal/univariate.hpp"
#include "focal/version.hpp"
