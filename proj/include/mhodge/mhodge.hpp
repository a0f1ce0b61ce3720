#pragma once

#include <mhodge/bounds.hpp>
#include <mhodge/chern.hpp>
#include <mhodge/ci_oracle.hpp>
#include <mhodge/composition.hpp>
#include <mhodge/error.hpp>
#include <mhodge/hodge.hpp>
#include <mhodge/record.hpp>
#include <mhodge/series.hpp>
#include <mhodge/sod.hpp>
#include <mhodge/verify.hpp>
#include <mhodge/version.hpp>
