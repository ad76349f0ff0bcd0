#pragma once

#include "emtree/combinatorics.hpp"
#include "emtree/dary_frontier.hpp"
#include "emtree/fixed_point.hpp"
#include "emtree/label_marks.hpp"
#include "emtree/leaf_depths.hpp"
#include "emtree/mark_polynomial.hpp"
#include "emtree/oracle.hpp"
#include "emtree/poly_series.hpp"
#include "emtree/rational.hpp"
#include "emtree/series.hpp"
#include "emtree/small_labels.hpp"
#include "emtree/table_io.hpp"
#include "emtree/ternary_gf.hpp"
#include "emtree/trees.hpp"
#include "emtree/verify.hpp"
