#pragma once

#include "bordx/error.hpp"
#include "bordx/graded_poly.hpp"
#include "bordx/int_matrix.hpp"
#include "bordx/integer.hpp"
#include "bordx/partition.hpp"
