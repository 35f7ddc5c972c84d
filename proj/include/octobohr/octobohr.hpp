#pragma once

#include "octobohr/octonion.hpp"
#include "octobohr/slice_series.hpp"
#include "octobohr/roots.hpp"
#include "octobohr/radii.hpp"
#include "octobohr/functionals.hpp"
#include "octobohr/theorems.hpp"
#include "octobohr/corpus.hpp"
#include "octobohr/verify.hpp"
#include "octobohr/io.hpp"
