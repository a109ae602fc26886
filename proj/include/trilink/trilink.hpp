#pragma once

// Umbrella header.

#include "trilink/scalar.hpp"
#include "trilink/geometry.hpp"
#include "trilink/linking.hpp"
#include "trilink/invariants.hpp"
#include "trilink/random.hpp"
#include "trilink/moves.hpp"
#include "trilink/canonical.hpp"
#include "trilink/classifier.hpp"
#include "trilink/io.hpp"
#include "trilink/fuzz.hpp"
