#pragma once

#include "relorder/classify.hpp"
#include "relorder/errors.hpp"
#include "relorder/finite_field.hpp"
#include "relorder/group.hpp"
#include "relorder/groups.hpp"
#include "relorder/numtheory.hpp"
#include "relorder/order_sums.hpp"
#include "relorder/parallel.hpp"
#include "relorder/subgroup.hpp"
#include "relorder/table_io.hpp"
#include "relorder/verify.hpp"
