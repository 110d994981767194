#pragma once

#include "dyck/convert.hpp"
#include "dyck/digraph.hpp"
#include "dyck/error.hpp"
#include "dyck/matrix.hpp"
#include "dyck/word.hpp"
