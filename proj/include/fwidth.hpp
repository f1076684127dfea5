#pragma once

#include "fwidth/bench.hpp"
#include "fwidth/case_verifier.hpp"
#include "fwidth/containment.hpp"
#include "fwidth/enumeration.hpp"
#include "fwidth/error.hpp"
#include "fwidth/formations.hpp"
#include "fwidth/fw.hpp"
#include "fwidth/permutation_table.hpp"
#include "fwidth/sequence.hpp"
#include "fwidth/text_io.hpp"
