#pragma once

#include "dbal/vertex_set.hpp"
#include "dbal/graph.hpp"
#include "dbal/graph6.hpp"
#include "dbal/enumerate.hpp"
#include "dbal/metrics.hpp"
#include "dbal/products.hpp"
#include "dbal/verify.hpp"
#include "dbal/corpus.hpp"
