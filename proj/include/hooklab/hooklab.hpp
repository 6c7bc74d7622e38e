#ifndef HOOKLAB_HOOKLAB_HPP
#define HOOKLAB_HOOKLAB_HPP

#include <hooklab/elliptic.hpp>
#include <hooklab/enumerate.hpp>
#include <hooklab/identities.hpp>
#include <hooklab/littlewood.hpp>
#include <hooklab/partition.hpp>
#include <hooklab/partition_sum.hpp>
#include <hooklab/pseries.hpp>
#include <hooklab/qseries.hpp>
#include <hooklab/rho.hpp>
#include <hooklab/series.hpp>
#include <hooklab/series_json.hpp>

#endif
