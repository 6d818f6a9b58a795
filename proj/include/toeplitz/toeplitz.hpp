#pragma once

#include "bigint.hpp"
#include "boshernitzan.hpp"
#include "coding.hpp"
#include "complexity.hpp"
#include "debruijn.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "language.hpp"
#include "parallel.hpp"
#include "repetitivity.hpp"
#include "spec.hpp"
#include "spectral.hpp"
#include "verdict.hpp"
#include "words.hpp"
