#pragma once

// Umbrella header.

#include "mdim/params.hpp"
#include "mdim/landmark_set.hpp"
#include "mdim/landmark_graph.hpp"
#include "mdim/verify.hpp"
#include "mdim/forbidden.hpp"
#include "mdim/construction.hpp"
#include "mdim/domination.hpp"
#include "mdim/search.hpp"
#include "mdim/io.hpp"
