#pragma once

// umbrella header: the whole library except the CLI layer

#include "ivcol/coloring.hpp"
#include "ivcol/errors.hpp"
#include "ivcol/euclid.hpp"
#include "ivcol/graph.hpp"
#include "ivcol/io.hpp"
#include "ivcol/kmn.hpp"
#include "ivcol/matrix.hpp"
#include "ivcol/oracle.hpp"
#include "ivcol/tree.hpp"
