#pragma once

#include <zerosum/error.hpp>
#include <zerosum/group.hpp>
#include <zerosum/gset.hpp>
#include <zerosum/invariants.hpp>
#include <zerosum/io.hpp>
#include <zerosum/parallel.hpp>
#include <zerosum/sequence.hpp>
#include <zerosum/setsum.hpp>
#include <zerosum/subgroup.hpp>
#include <zerosum/verdict.hpp>
#include <zerosum/verify/check.hpp>
#include <zerosum/verify/sweep.hpp>
#include <zerosum/weighted.hpp>
