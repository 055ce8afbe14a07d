#pragma once

#include "hpl/errors.hpp"
#include "hpl/rational.hpp"
#include "hpl/linalg.hpp"
#include "hpl/root_system.hpp"
#include "hpl/apartment.hpp"
#include "hpl/paths.hpp"
#include "hpl/model.hpp"
#include "hpl/galleries.hpp"
#include "hpl/io.hpp"
