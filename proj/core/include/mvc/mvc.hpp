#pragma once

#include "mvc/baselines.hpp"
#include "mvc/bench.hpp"
#include "mvc/cover.hpp"
#include "mvc/dimacs.hpp"
#include "mvc/evaluation.hpp"
#include "mvc/generators.hpp"
#include "mvc/graph.hpp"
#include "mvc/nec.hpp"
#include "mvc/registry.hpp"
#include "mvc/rng.hpp"
