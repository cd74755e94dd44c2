#pragma once

#include "dagitty/errors.hpp"
#include "dagitty/graph.hpp"
#include "dagitty/identification.hpp"
#include "dagitty/implications.hpp"
#include "dagitty/model_code.hpp"
#include "dagitty/paths.hpp"
#include "dagitty/transforms.hpp"
