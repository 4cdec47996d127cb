#pragma once

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "group_algebra.hpp"
#include "groups.hpp"
#include "invariants.hpp"
#include "json_io.hpp"
#include "laurent.hpp"
#include "random_gen.hpp"
#include "rational.hpp"
#include "shift.hpp"
#include "suites.hpp"
#include "weyl.hpp"
