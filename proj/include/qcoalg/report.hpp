#pragma once

// Deterministic reports: insertion-ordered JSON objects, rendered either as
// JSON or as indented, key-aligned plain text.

#include <string>

#include <json.hpp>

#include "qcoalg/comodule.hpp"
#include "qcoalg/localization.hpp"
#include "qcoalg/relations.hpp"

namespace qcoalg {

using Report = nlohmann::ordered_json;

Report quiver_report(const Quiver& q);
Report path_list_report(const Quiver& q, const std::vector<Path>& paths);
Report tensor_report(const Quiver& q, const TensorExpansion& t);
Report coalgebra_report(const GradedSubcoalgebra& c);
Report ideal_report(const RelationIdeal& omega);
Report localization_report(const Localization& loc);
Report classification_report(const Quiver& q,
                             const IdempotentClassification& cls,
                             std::size_t max_length);
Report witness_report(const Quiver& q, const CriterionWitness& w);
Report length_vector_report(const Quiver& q, const LengthVector& v);
Report comodule_report(const FinComodule& m);
Report validation_report(const ValidationReport& r);

std::string render_json(const Report& r);
std::string render_text(const Report& r);

}  // namespace qcoalg
