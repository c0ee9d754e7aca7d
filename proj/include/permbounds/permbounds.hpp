#pragma once

#include "permbounds/bounds.hpp"
#include "permbounds/clique.hpp"
#include "permbounds/codes.hpp"
#include "permbounds/constructions.hpp"
#include "permbounds/error.hpp"
#include "permbounds/exactmath.hpp"
#include "permbounds/pa_file.hpp"
#include "permbounds/perm.hpp"
#include "permbounds/search.hpp"
