#pragma once

#include <gmpxx.h>

namespace crankmex {

/// Exact integer used for every coefficient and count.
using BigInt = mpz_class;

}  // namespace crankmex
