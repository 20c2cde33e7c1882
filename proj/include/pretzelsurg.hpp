#pragma once

// Umbrella header.

#include "pretzelsurg/extrat.hpp"
#include "pretzelsurg/laurent.hpp"
#include "pretzelsurg/chainfill.hpp"
#include "pretzelsurg/pretzel.hpp"
#include "pretzelsurg/grouppres.hpp"
#include "pretzelsurg/classify.hpp"
#include "pretzelsurg/record.hpp"
#include "pretzelsurg/oracles.hpp"
#include "pretzelsurg/acceptance.hpp"
