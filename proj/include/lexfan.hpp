#pragma once

#include "lexfan/admissible.hpp"
#include "lexfan/complex.hpp"
#include "lexfan/cone.hpp"
#include "lexfan/errors.hpp"
#include "lexfan/faces.hpp"
#include "lexfan/feasibility.hpp"
#include "lexfan/fiber_report.hpp"
#include "lexfan/hilbert.hpp"
#include "lexfan/lattice.hpp"
#include "lexfan/lexvec.hpp"
#include "lexfan/lineality.hpp"
#include "lexfan/models.hpp"
#include "lexfan/multiplier.hpp"
#include "lexfan/polyhedron.hpp"
#include "lexfan/rational.hpp"
#include "lexfan/svg.hpp"
