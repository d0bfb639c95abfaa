#pragma once

#include <json.hpp>

#include "feasibility.hpp"
#include "horn_lists.hpp"
#include "minimality.hpp"
#include "necessity.hpp"
#include "sweep.hpp"
#include "witness.hpp"

namespace horncone {

/* JSON shapes used by the library surface and the command line.  nlohmann's
   object type keeps keys sorted, so serialized output is byte-stable. */

nlohmann::json coefficient_json(const BigInt& v);  // number up to 2^53, then string
nlohmann::json matrix_json(const Matrix& a);       // rows of [re, im] pairs
nlohmann::json index_set_json(const IndexSet& s);  // sorted 1-based elements

nlohmann::json report_json(const FeasibilityReport& report);
nlohmann::json witness_json(const WitnessResult& result);
// One JSON-lines record: {"r","n","m","sets","K","coeff"}; K is null for
// S/R-list entries.
nlohmann::json list_entry_json(const ListEntry& entry, int n, int m);
nlohmann::json horn_triple_json(const HornTriple& triple, int n, int m);
nlohmann::json redundancy_json(const RedundancyReport& report);
nlohmann::json sweep_json(const SweepReport& report);
nlohmann::json necessity_json(const NecessityOutcome& outcome);

}  // namespace horncone
