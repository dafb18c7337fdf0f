#pragma once

#include <kostant/asymptotics.hpp>
#include <kostant/cache.hpp>
#include <kostant/cells.hpp>
#include <kostant/census.hpp>
#include <kostant/error.hpp>
#include <kostant/exact.hpp>
#include <kostant/montecarlo.hpp>
#include <kostant/parallel.hpp>
#include <kostant/patterns.hpp>
#include <kostant/permutation.hpp>
#include <kostant/random.hpp>
#include <kostant/report.hpp>
#include <kostant/sequences.hpp>
