#pragma once

// Umbrella header.

#include <sonseq/version.hpp>
#include <sonseq/integers.hpp>
#include <sonseq/rng.hpp>
#include <sonseq/matrix.hpp>
#include <sonseq/pic.hpp>
#include <sonseq/k0.hpp>
#include <sonseq/sequence.hpp>
#include <sonseq/complement.hpp>
#include <sonseq/a8.hpp>
#include <sonseq/search.hpp>
#include <sonseq/poly.hpp>
#include <sonseq/io.hpp>
