#pragma once

#include "cbsum/identities.hpp"
#include "cbsum/polynomial.hpp"
#include "cbsum/rational.hpp"
#include "cbsum/sequences.hpp"
#include "cbsum/stirling.hpp"
#include "cbsum/sums.hpp"
#include "cbsum/verify.hpp"
