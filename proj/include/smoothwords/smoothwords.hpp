#pragma once

#include "smoothwords/calculus.hpp"
#include "smoothwords/census.hpp"
#include "smoothwords/concat.hpp"
#include "smoothwords/errors.hpp"
#include "smoothwords/word.hpp"
