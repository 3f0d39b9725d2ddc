#pragma once

#include "heavypath/conditions.hpp"
#include "heavypath/constructive.hpp"
#include "heavypath/graph.hpp"
#include "heavypath/graph_io.hpp"
#include "heavypath/harness.hpp"
#include "heavypath/instances.hpp"
#include "heavypath/oracle.hpp"
#include "heavypath/rational.hpp"
#include "heavypath/trace.hpp"
