#pragma once

/**
 * @file pointed.hpp
 * @brief Everything at once.
 */

#include "pointed/abelian.hpp"
#include "pointed/braiding.hpp"
#include "pointed/cli.hpp"
#include "pointed/datum.hpp"
#include "pointed/datum_io.hpp"
#include "pointed/error.hpp"
#include "pointed/exactfield.hpp"
#include "pointed/freealg.hpp"
#include "pointed/linking.hpp"
#include "pointed/nichols.hpp"
#include "pointed/parallel.hpp"
#include "pointed/report.hpp"
#include "pointed/rootsys.hpp"
#include "pointed/square_matrix.hpp"
