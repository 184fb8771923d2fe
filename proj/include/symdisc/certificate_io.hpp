#pragma once

// Certificate JSON, schema version 1:
//   { version, n, lambda: [[re,im],...], mu: [[re,im],...], residual_rel, kernel_abs,
//     construction, parent (nested or null), fn_witness: {point, value_abs}, seed,
//     tolerances: {certify, witness_factor} }

#include <filesystem>
#include <string>

#include "json.hpp"
#include "symdisc/zerofind.hpp"

namespace symdisc {

inline constexpr int kCertificateVersion = 1;

nlohmann::json certificate_to_json(const ZeroCertificate& cert);
ZeroCertificate certificate_from_json(const nlohmann::json& j);

void write_certificate(const std::filesystem::path& path, const ZeroCertificate& cert);
ZeroCertificate read_certificate(const std::filesystem::path& path);

}  // namespace symdisc
