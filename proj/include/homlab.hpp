#pragma once

#include "homlab/budget.hpp"
#include "homlab/cnf.hpp"
#include "homlab/errors.hpp"
#include "homlab/extended_weight.hpp"
#include "homlab/geometry.hpp"
#include "homlab/graph.hpp"
#include "homlab/homomorphism.hpp"
#include "homlab/induced_path.hpp"
#include "homlab/io.hpp"
#include "homlab/local_oracle.hpp"
#include "homlab/local_solver.hpp"
#include "homlab/property_star.hpp"
#include "homlab/random_instances.hpp"
#include "homlab/reductions/brute_force.hpp"
#include "homlab/reductions/independent_set.hpp"
#include "homlab/reductions/lshom.hpp"
#include "homlab/reductions/maxcut.hpp"
#include "homlab/reductions/output.hpp"
#include "homlab/reductions/verify.hpp"
#include "homlab/separator.hpp"
#include "homlab/surjective_solver.hpp"
#include "homlab/targets.hpp"
#include "homlab/weight_model.hpp"
#include "homlab/whom_solver.hpp"
