#pragma once

#include "qwalks/algebra/bigint.hpp"
#include "qwalks/algebra/laurent.hpp"
#include "qwalks/algebra/ratfun.hpp"
#include "qwalks/algebra/series.hpp"
#include "qwalks/algebra/surd.hpp"
#include "qwalks/closedform.hpp"
#include "qwalks/enumerate/count_table.hpp"
#include "qwalks/enumerate/dp.hpp"
#include "qwalks/enumerate/functional_equation.hpp"
#include "qwalks/enumerate/modular.hpp"
#include "qwalks/enumerate/oracle.hpp"
#include "qwalks/errors.hpp"
#include "qwalks/estimate.hpp"
#include "qwalks/growth.hpp"
#include "qwalks/kernel.hpp"
#include "qwalks/stepset.hpp"
#include "qwalks/walkgroup.hpp"
