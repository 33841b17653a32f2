// Umbrella header.
#pragma once

#include "entcover/core.hpp"
#include "entcover/dsu.hpp"
#include "entcover/instances.hpp"
#include "entcover/io.hpp"
#include "entcover/greedy.hpp"
#include "entcover/tree.hpp"
#include "entcover/flow.hpp"
#include "entcover/exact.hpp"
#include "entcover/certify.hpp"
#include "entcover/report.hpp"
