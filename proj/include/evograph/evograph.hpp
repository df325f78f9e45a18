// Copyright (c) evograph contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "evograph/algorithm.hpp"
#include "evograph/bounds.hpp"
#include "evograph/concurrent.hpp"
#include "evograph/errors.hpp"
#include "evograph/evaluate.hpp"
#include "evograph/generate.hpp"
#include "evograph/graph.hpp"
#include "evograph/incremental.hpp"
#include "evograph/manifest.hpp"
#include "evograph/parse.hpp"
#include "evograph/qrs.hpp"
#include "evograph/reduce.hpp"
#include "evograph/result_io.hpp"
#include "evograph/snapshots.hpp"
#include "evograph/stats.hpp"
#include "evograph/types.hpp"
#include "evograph/uvv.hpp"
#include "evograph/version_mask.hpp"
#include "evograph/versioned_graph.hpp"
