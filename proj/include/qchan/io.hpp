#pragma once

#include <string>

#include <json.hpp>

#include "qchan/birkhoff.hpp"
#include "qchan/catlaws.hpp"
#include "qchan/channel.hpp"
#include "qchan/extremality.hpp"
#include "qchan/mixapprox.hpp"

namespace qchan::io {

// Channel JSON grammar: {"dim": d, "kraus": [matrix, ...]} with each matrix
// an array of rows and each entry a two-element [real, imag] array.

KrausChannel parse_channel_json(const std::string& text);
KrausChannel load_channel(const std::string& path);
nlohmann::json channel_to_json(const KrausChannel& k);

// Matrix CSV: one row per line, comma-separated decimal reals.
ComplexMatrix parse_matrix_csv(const std::string& text);
ComplexMatrix load_matrix_csv(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

nlohmann::json decomposition_to_json(const BirkhoffDecomposition& d);
nlohmann::json validation_report_to_json(const ValidationReport& r);
nlohmann::json extremality_report_to_json(const ExtremalityReport& r);
nlohmann::json law_report_to_json(const LawReport& r);
nlohmann::json fit_report_to_json(const FitReport& r);
nlohmann::json experiment_to_json(const ExperimentTable& t);
std::string experiment_to_csv(const ExperimentTable& t);

}  // namespace qchan::io
