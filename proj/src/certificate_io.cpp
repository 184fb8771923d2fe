#include "symdisc/certificate_io.hpp"

#include <fstream>

#include "symdisc/error.hpp"

namespace symdisc {

namespace {

nlohmann::json complex_to_json(Complex c) { return nlohmann::json::array({c.real(), c.imag()}); }

Complex complex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorKind::Parse, "complex value must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

nlohmann::json point_to_json(const PolyPoint& p) {
  auto out = nlohmann::json::array();
  for (const auto& c : p.coords()) out.push_back(complex_to_json(c));
  return out;
}

PolyPoint point_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "point must be an array of [re, im] pairs");
  std::vector<Complex> coords;
  for (const auto& c : j) coords.push_back(complex_from_json(c));
  return PolyPoint::raw(std::move(coords));
}

}  // namespace

nlohmann::json certificate_to_json(const ZeroCertificate& cert) {
  nlohmann::json j;
  j["version"] = kCertificateVersion;
  j["n"] = cert.n;
  j["lambda"] = point_to_json(cert.lambda);
  j["mu"] = point_to_json(cert.mu);
  j["residual_rel"] = cert.residual_rel;
  j["kernel_abs"] = cert.kernel_abs;
  j["construction"] = std::string(to_string(cert.construction));
  j["parent"] = cert.parent ? certificate_to_json(*cert.parent) : nlohmann::json(nullptr);
  if (cert.fn_witness) {
    j["fn_witness"] = {{"point", complex_to_json(cert.fn_witness->point)},
                       {"value_abs", cert.fn_witness->value_abs}};
  } else {
    j["fn_witness"] = nullptr;
  }
  j["seed"] = cert.seed;
  j["tolerances"] = {{"certify", cert.tolerance}, {"witness_factor", kWitnessFactor}};
  return j;
}

ZeroCertificate certificate_from_json(const nlohmann::json& j) {
  try {
    if (j.at("version").get<int>() != kCertificateVersion)
      throw Error(ErrorKind::Parse, "unsupported certificate version");
    ZeroCertificate cert;
    cert.n = j.at("n").get<std::size_t>();
    cert.lambda = point_from_json(j.at("lambda"));
    cert.mu = point_from_json(j.at("mu"));
    if (cert.lambda.size() != cert.n || cert.mu.size() != cert.n)
      throw Error(ErrorKind::Parse, "point sizes do not match n");
    cert.residual_rel = j.at("residual_rel").get<double>();
    cert.kernel_abs = j.at("kernel_abs").get<double>();
    cert.construction = construction_from_string(j.at("construction").get<std::string>());
    if (!j.at("parent").is_null())
      cert.parent = std::make_shared<const ZeroCertificate>(certificate_from_json(j.at("parent")));
    if (const auto& w = j.at("fn_witness"); !w.is_null()) {
      FnWitness witness;
      witness.point = complex_from_json(w.at("point"));
      witness.value_abs = w.at("value_abs").get<double>();
      cert.fn_witness = witness;
    }
    cert.seed = j.at("seed").get<std::uint64_t>();
    cert.tolerance = j.at("tolerances").at("certify").get<double>();
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed certificate: ") + e.what());
  }
}

void write_certificate(const std::filesystem::path& path, const ZeroCertificate& cert) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Parse, "cannot open " + path.string() + " for writing");
  out << certificate_to_json(cert).dump(2) << '\n';
}

ZeroCertificate read_certificate(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
  return certificate_from_json(j);
}

}  // namespace symdisc
