#pragma once

#include "align.hpp"
#include "debruijn.hpp"
#include "error.hpp"
#include "interval_tree.hpp"
#include "kmer_assignment.hpp"
#include "landscape.hpp"
#include "simulate.hpp"
#include "stats.hpp"
#include "suffix_index.hpp"
#include "text.hpp"
#include "version.hpp"
#include "io/alignment_file.hpp"
#include "io/assignment_file.hpp"
#include "io/index_file.hpp"
#include "io/msl_file.hpp"
#include "io/sequence_file.hpp"
#include "pipeline.hpp"
