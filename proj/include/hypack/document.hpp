#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hypack/assembler.hpp"
#include "hypack/complex.hpp"
#include "hypack/geometry.hpp"

namespace hypack {

inline constexpr const char* kSchemaVersion = "1";

struct ComplexDocument {
    std::string schema_version = kSchemaVersion;
    TriangulatedComplex complex;
    nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
};

class DocumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Numbers are written with 17 significant digits so that parse(serialize(d)) reproduces d.
std::string serialize(const ComplexDocument& doc);
ComplexDocument parse_document(const std::string& text);

std::string dump17(const nlohmann::ordered_json& j, int indent = 2);
std::string format17(double x);

nlohmann::ordered_json to_json(const AssemblyCertificate& c);
nlohmann::ordered_json to_json(const GeometricCertificate& c);

std::string read_file(const std::string& path);
// Writes a sibling temporary file and renames it over path.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace hypack
