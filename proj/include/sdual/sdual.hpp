#pragma once

#include "cf.hpp"
#include "corpus.hpp"
#include "dualmap.hpp"
#include "errors.hpp"
#include "geom.hpp"
#include "invert.hpp"
#include "quad.hpp"
#include "rational.hpp"
#include "spectral.hpp"
#include "subst.hpp"
#include "words.hpp"
