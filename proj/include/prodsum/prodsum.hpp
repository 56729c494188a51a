#pragma once

#include "prodsum/checkpoint.hpp"
#include "prodsum/common.hpp"
#include "prodsum/forms.hpp"
#include "prodsum/parallel.hpp"
#include "prodsum/primes.hpp"
#include "prodsum/profiles.hpp"
#include "prodsum/sequences.hpp"
#include "prodsum/smallest_k.hpp"
