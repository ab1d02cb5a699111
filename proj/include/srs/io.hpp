#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "srs/elliptic.hpp"
#include "srs/srs_pde.hpp"
#include "srs/whitham.hpp"

namespace srs {

using json = nlohmann::json;

// header lines written at the top of every CSV and copied into every JSON under "meta"
struct OutputMeta {
    std::string version;
    std::string config_hash;
    double tol_quad = 0.0;
    std::vector<std::pair<std::string, std::string>> extra;

    json to_json() const;
};

std::uint64_t fnv1a64(const std::string& s);
std::string hex64(std::uint64_t v);

// 17 significant digits, '.' decimal point regardless of locale
std::string fmt17(double v);

class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const OutputMeta& meta, const std::vector<std::string>& columns);
    CsvWriter& num(double v);
    CsvWriter& str(const std::string& s);
    void end_row();
    std::size_t rows() const { return rows_; }

private:
    std::ofstream os_;
    std::size_t ncol_ = 0, col_ = 0, rows_ = 0;
    void sep();
};

void write_json(const std::filesystem::path& path, const json& j);

json frame_to_json(const EllipticFrame& f);
json certificate_to_json(const PositivityCertificate& cert, bool with_boxes);

void write_field_snapshot(const std::filesystem::path& path, const FieldGrid& g, const OutputMeta& meta);

}  // namespace srs
