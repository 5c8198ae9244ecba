#pragma once

#include "toriq/bounds.hpp"
#include "toriq/classify.hpp"
#include "toriq/cone.hpp"
#include "toriq/covering.hpp"
#include "toriq/error.hpp"
#include "toriq/exactmat.hpp"
#include "toriq/fancone.hpp"
#include "toriq/fandata.hpp"
#include "toriq/galecore.hpp"
#include "toriq/io.hpp"
#include "toriq/parallel.hpp"
#include "toriq/polytope.hpp"
