#pragma once

#include "cap/chordal.hpp"
#include "cap/clique_enum.hpp"
#include "cap/components.hpp"
#include "cap/edge_avoidance.hpp"
#include "cap/gadgets.hpp"
#include "cap/generate.hpp"
#include "cap/graph.hpp"
#include "cap/io.hpp"
#include "cap/oracle.hpp"
#include "cap/types.hpp"
#include "cap/vertex_avoidance.hpp"
