#pragma once

#include "parikh/alphabet.hpp"
#include "parikh/bench.hpp"
#include "parikh/diff_state.hpp"
#include "parikh/gen.hpp"
#include "parikh/matcher.hpp"
#include "parikh/mfsp.hpp"
#include "parikh/oracle.hpp"
#include "parikh/packing.hpp"
#include "parikh/parikh_vector.hpp"
