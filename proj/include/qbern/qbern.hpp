#pragma once

#include "qbern/bernstein.hpp"
#include "qbern/bigrat.hpp"
#include "qbern/carlitz.hpp"
#include "qbern/mpoly.hpp"
#include "qbern/padic.hpp"
#include "qbern/poly.hpp"
#include "qbern/qcomb.hpp"
#include "qbern/ratq.hpp"
#include "qbern/registry.hpp"
#include "qbern/report.hpp"
#include "qbern/text.hpp"
