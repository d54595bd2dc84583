#pragma once

#include "plumb/bounds.hpp"
#include "plumb/braid.hpp"
#include "plumb/error.hpp"
#include "plumb/graph.hpp"
#include "plumb/report.hpp"
#include "plumb/search.hpp"
#include "plumb/tree.hpp"
