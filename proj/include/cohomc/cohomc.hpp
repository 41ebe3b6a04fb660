#pragma once

#include "cohomc/catalog.hpp"
#include "cohomc/cohomology_group.hpp"
#include "cohomc/errors.hpp"
#include "cohomc/int_matrix.hpp"
#include "cohomc/kunneth.hpp"
#include "cohomc/lattice_support.hpp"
#include "cohomc/les_engine.hpp"
#include "cohomc/oracle.hpp"
#include "cohomc/pipeline.hpp"
#include "cohomc/section_calculus.hpp"
#include "cohomc/space_atlas.hpp"
