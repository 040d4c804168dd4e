// The adaptive rule is header-only; this TU just verifies it compiles alone.
#include "specgeo/quadrature.hpp"
