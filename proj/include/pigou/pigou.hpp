#ifndef PIGOU_PIGOU_HPP
#define PIGOU_PIGOU_HPP

#include "pigou/cooperation.hpp"
#include "pigou/curve.hpp"
#include "pigou/equilibrium.hpp"
#include "pigou/errors.hpp"
#include "pigou/io.hpp"
#include "pigou/plot.hpp"
#include "pigou/scenario.hpp"
#include "pigou/sweep.hpp"
#include "pigou/welfare.hpp"

#endif
