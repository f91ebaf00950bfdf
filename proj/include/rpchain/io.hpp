#pragma once

#include <iosfwd>
#include <nlohmann/json_fwd.hpp>
#include <string>

#include "rpchain/rp.hpp"

namespace rpchain {

/// Operator file: UTF-8 text, one term per line,
///   coeff_re coeff_im site1:LETTER site2:LETTER ...
/// Blank lines and '#' comments are ignored.
std::vector<PauliString> parse_operator_terms(std::istream& in);
std::vector<PauliString> load_operator_terms(const std::string& path);

/// State files: vector as header "dim" then one "re im" per amplitude;
/// density as header "dim dim" then row-major "re im" pairs.
QuantumState load_state(const std::string& path, const ChainFrame& frame,
                        Subsystem sub = Subsystem::full);
void save_state(const QuantumState& state, const std::string& path);

/// Row-major CSV with complex entries as "re,im" cells.
void save_matrix_csv(const Mat& m, const std::string& path);
void save_matrix_csv(const RealMat& m, const std::string& path);

nlohmann::json certificate_to_json(const RpCertificate& cert);

}  // namespace rpchain
