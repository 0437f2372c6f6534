#pragma once

#include "qsuper/scalar.hpp"
#include "qsuper/errors.hpp"
#include "qsuper/matrix.hpp"
#include "qsuper/graded.hpp"
#include "qsuper/bilinear_table.hpp"
#include "qsuper/superalgebra.hpp"
#include "qsuper/semidirect.hpp"
#include "qsuper/double_extension.hpp"
#include "qsuper/decomposition.hpp"
#include "qsuper/catalog.hpp"
#include "qsuper/io.hpp"
#include "qsuper/report.hpp"
