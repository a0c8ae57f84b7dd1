#pragma once

#include "rgrover/errors.hpp"
#include "rgrover/linalg.hpp"
#include "rgrover/csv.hpp"
#include "rgrover/simulator.hpp"
#include "rgrover/logical.hpp"
#include "rgrover/perturbation.hpp"
#include "rgrover/coherence.hpp"
#include "rgrover/comparator.hpp"
#include "rgrover/circuit.hpp"
#include "rgrover/gcp.hpp"
