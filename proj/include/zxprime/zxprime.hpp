#pragma once

#include "zxprime/bench.hpp"
#include "zxprime/certificate.hpp"
#include "zxprime/division.hpp"
#include "zxprime/engine.hpp"
#include "zxprime/evidence.hpp"
#include "zxprime/integer.hpp"
#include "zxprime/matrix.hpp"
#include "zxprime/modpoly.hpp"
#include "zxprime/oracle.hpp"
#include "zxprime/oracle_spec.hpp"
#include "zxprime/parser.hpp"
#include "zxprime/poly.hpp"
#include "zxprime/repl.hpp"
