#pragma once

#include "indcore/error.hpp"
#include "indcore/vertex_set.hpp"
#include "indcore/graph.hpp"
#include "indcore/tree_model.hpp"
#include "indcore/chordal.hpp"
#include "indcore/complex.hpp"
#include "indcore/dismantle.hpp"
#include "indcore/homology.hpp"
#include "indcore/tr_good.hpp"
#include "indcore/decide.hpp"
#include "indcore/explorer.hpp"
#include "indcore/io.hpp"
#include "indcore/sweeps.hpp"
