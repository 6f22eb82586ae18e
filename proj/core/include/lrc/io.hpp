#ifndef LRC_IO_HPP
#define LRC_IO_HPP

#include <string>

#include <json.hpp>

#include "lrc/construct.hpp"
#include "lrc/locality.hpp"

namespace lrc {

// On-disk formats use 1-based coordinates (the usual coding-theory
// convention); the in-memory API is 0-based. Loaders re-validate every
// structural invariant.

nlohmann::json code_to_json(const LinearCode& code);
LinearCode code_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const RepairCertificate& cert);
RepairCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json distance_check_to_json(const DistanceCheckReport& report);
nlohmann::json construction_report_to_json(const ConstructionReport& report);

LinearCode load_code_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace lrc

#endif
