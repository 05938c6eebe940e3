#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace radspec {

// Scalar for the extended-precision solve path.  The monomial-Gaussian Gram
// matrix loses roughly one decimal digit per basis function, so 50 digits
// covers the default basis size 40 with margin; double covers N <~ 19.
using BigFloat = boost::multiprecision::cpp_bin_float_50;

}  // namespace radspec
