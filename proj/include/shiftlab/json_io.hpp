#ifndef SHIFTLAB_JSON_IO_HPP
#define SHIFTLAB_JSON_IO_HPP

#include <json.hpp>

#include "shiftlab/aluthge.hpp"
#include "shiftlab/berger.hpp"
#include "shiftlab/classify.hpp"
#include "shiftlab/lattice.hpp"
#include "shiftlab/moments.hpp"
#include "shiftlab/powers.hpp"

namespace shiftlab {

// Machine format. ordered_json keeps field order deterministic, so identical
// inputs serialize byte-identically. Rationals travel as "p/q" strings,
// numeric weights as precision-derived decimal strings.
using json = nlohmann::ordered_json;

json diagram_to_json(const WeightDiagram& d);
WeightDiagram diagram_from_json(const json& j);

json measure_to_json(const AtomicMeasure& mu);
AtomicMeasure measure_from_json(const json& j);

json sequence_to_json(const BiMomentSequence& g);
BiMomentSequence sequence_from_json(const json& j);

json verdict_to_json(const PredicateVerdict& v);
json report_to_json(const ClassificationReport& r);
json power_report_to_json(const PowerSphericalReport& r);
json two_atom_conditions_to_json(const TwoAtomConditions& c);

json numeric_diagram_to_json(const NumericDiagram& d);
json iteration_trace_to_json(const IterationTrace& t);

json moment_matrix_to_json(const MomentMatrix& m);
json relations_to_json(const std::vector<ColumnRelation>& rels,
                       const std::vector<MonomialLabel>& labels);

}  // namespace shiftlab

#endif
