#pragma once

#include "cubical/error.hpp"
#include "cubical/lattice.hpp"
#include "cubical/term.hpp"
#include "cubical/demorgan.hpp"
#include "cubical/finite_lattice.hpp"
#include "cubical/duality.hpp"
#include "cubical/cube.hpp"
#include "cubical/cset.hpp"
#include "cubical/flatness.hpp"
#include "cubical/realization.hpp"
#include "cubical/moore.hpp"
#include "cubical/corpus.hpp"
#include "cubical/json_io.hpp"
