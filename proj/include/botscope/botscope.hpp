#pragma once

#include "botscope/common.hpp"
#include "botscope/contentstats.hpp"
#include "botscope/corpus.hpp"
#include "botscope/detectors.hpp"
#include "botscope/evaluation.hpp"
#include "botscope/graph.hpp"
#include "botscope/linkmap.hpp"
#include "botscope/rng.hpp"
#include "botscope/seedscan.hpp"
#include "botscope/synth.hpp"
#include "botscope/text.hpp"
