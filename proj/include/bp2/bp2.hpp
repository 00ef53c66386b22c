#pragma once

#include "bp2/audit.hpp"
#include "bp2/certificates.hpp"
#include "bp2/deciders.hpp"
#include "bp2/errors.hpp"
#include "bp2/graph.hpp"
#include "bp2/graph_io.hpp"
#include "bp2/oracle.hpp"
#include "bp2/partition.hpp"
