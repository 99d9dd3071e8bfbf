#pragma once

// Umbrella header for the offline parts of the library (everything
// except live OEIS retrieval, which is in evenup/oeis_fetch.hpp).

#include "evenup/catalan.hpp"
#include "evenup/cli.hpp"
#include "evenup/errors.hpp"
#include "evenup/format.hpp"
#include "evenup/genfunc.hpp"
#include "evenup/numeric.hpp"
#include "evenup/oeis.hpp"
#include "evenup/poly.hpp"
#include "evenup/series.hpp"
#include "evenup/transfer.hpp"
#include "evenup/words.hpp"
