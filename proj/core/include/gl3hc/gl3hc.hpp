#pragma once

#include "gl3hc/errors.hpp"
#include "gl3hc/exactnum.hpp"
#include "gl3hc/highest.hpp"
#include "gl3hc/izergin.hpp"
#include "gl3hc/params.hpp"
#include "gl3hc/partitions.hpp"
#include "gl3hc/scalar_product.hpp"
#include "gl3hc/verify.hpp"
