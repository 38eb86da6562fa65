#pragma once

#include <complex>
#include <vector>

namespace vpdlr {

using cvec = std::vector<std::complex<double>>;

bool is_power_of_two(long n);

// In-place radix-2 transform. Forward uses exp(-2 pi i jk/n); the inverse
// includes the 1/n factor.
void fft(cvec& a, bool inverse = false);

} // namespace vpdlr
