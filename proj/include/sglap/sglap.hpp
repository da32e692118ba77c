#pragma once

#include "sglap/balance.hpp"
#include "sglap/bounds.hpp"
#include "sglap/degree.hpp"
#include "sglap/eigen.hpp"
#include "sglap/io.hpp"
#include "sglap/matrix.hpp"
#include "sglap/moments.hpp"
#include "sglap/signed_graph.hpp"
