#pragma once

#include "posr/errors.hpp"
#include "posr/element_set.hpp"
#include "posr/table.hpp"
#include "posr/axioms.hpp"
#include "posr/analysis.hpp"
#include "posr/isomorphism.hpp"
#include "posr/graph.hpp"
#include "posr/constructions.hpp"
#include "posr/enumerate.hpp"
#include "posr/io.hpp"
#include "posr/ring.hpp"
#include "posr/harness.hpp"
