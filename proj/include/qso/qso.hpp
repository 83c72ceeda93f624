#pragma once

#include "qso/catalog.hpp"
#include "qso/closed_forms.hpp"
#include "qso/conjugacy.hpp"
#include "qso/exact_sets.hpp"
#include "qso/fixed_point_search.hpp"
#include "qso/io.hpp"
#include "qso/partition.hpp"
#include "qso/permutation.hpp"
#include "qso/scalar_map.hpp"
#include "qso/simplex.hpp"
#include "qso/tensor.hpp"
#include "qso/theorems.hpp"
#include "qso/trajectory.hpp"
