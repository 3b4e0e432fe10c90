#pragma once

// JSON file formats:
//   function:   {"entries":[{"from":"a","to":"b","value":"4"}, ...]}
//   weights:    {"ring":"Z/5","weights":[{"from":"a","to":"c","value":"2"}, ...]}
//   potential:  {"ring":"Z/5","potential":[{"vertex":"a","value":"1"}, ...]}
//   report:     see write_report_json
// Values use the ring element text encodings.

#include <memory>
#include <optional>
#include <string>

#include "incalg/incidence.hpp"
#include "incalg/mult.hpp"
#include "incalg/oracle.hpp"

namespace incalg {

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

std::string write_function_json(const IncidenceFunction& f);
/// Throws InputError on malformed JSON and SupportError for pairs outside the order.
IncidenceFunction read_function_json(const std::string& text, const IncidenceAlgebra& a);

std::string write_weights_json(const WeightSystem& ws);
/// Every strictly comparable class pair must appear exactly once, named by
/// class representatives; the ring field must match `ring` when given.
WeightSystem read_weights_json(const std::string& text, std::shared_ptr<const ComparabilityGraph> graph,
                               const std::optional<Ring>& ring = std::nullopt);

std::string write_potential_json(const Potential& v, const ComparabilityGraph& graph, const Ring& ring);
Potential read_potential_json(const std::string& text, const ComparabilityGraph& graph, const Ring& ring);

std::string write_report_json(const VerificationReport& report);

}  // namespace incalg
