#pragma once

#include "pbat/bat.hpp"
#include "pbat/bench.hpp"
#include "pbat/connectivity.hpp"
#include "pbat/generate.hpp"
#include "pbat/network.hpp"
#include "pbat/reliability.hpp"
#include "pbat/verify.hpp"
