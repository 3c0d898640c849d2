#pragma once

#include "bounds.hpp"
#include "decomposition.hpp"
#include "flower.hpp"
#include "fvs.hpp"
#include "generate.hpp"
#include "graph.hpp"
#include "harness.hpp"
#include "io.hpp"
#include "kernel.hpp"
#include "lineq.hpp"
#include "matching.hpp"
#include "oracle.hpp"
#include "reductions.hpp"
#include "report.hpp"
