#pragma once

#include "bigint.hpp"
#include "character.hpp"
#include "cover.hpp"
#include "cyclic_family.hpp"
#include "cyclotomic.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "group.hpp"
#include "group_posets.hpp"
#include "induction.hpp"
#include "lfunction.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "poset.hpp"
#include "report.hpp"
#include "theorems.hpp"
