#include "qtl/core/quadrature.hpp"
