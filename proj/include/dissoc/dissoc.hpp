#pragma once

// Umbrella header.
#include "dissoc/canonical.hpp"
#include "dissoc/constructions.hpp"
#include "dissoc/count.hpp"
#include "dissoc/generators.hpp"
#include "dissoc/graph.hpp"
#include "dissoc/graph6.hpp"
#include "dissoc/parallel.hpp"
#include "dissoc/question.hpp"
#include "dissoc/report_io.hpp"
#include "dissoc/scan.hpp"
#include "dissoc/transforms.hpp"
#include "dissoc/verify.hpp"
