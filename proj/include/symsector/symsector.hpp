#pragma once

#include "symsector/combinatorics.hpp"
#include "symsector/errors.hpp"
#include "symsector/io.hpp"
#include "symsector/linalg.hpp"
#include "symsector/optimizer.hpp"
#include "symsector/projector.hpp"
#include "symsector/property_a.hpp"
#include "symsector/rng.hpp"
#include "symsector/states.hpp"
#include "symsector/version.hpp"
#include "symsector/witness.hpp"
