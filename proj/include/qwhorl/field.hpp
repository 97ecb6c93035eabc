#pragma once

// Sampled distributions, iso-contour extraction and the on-disk formats.
//
// File contracts:
//   CSV field  : header "x,y,value", one node per line, y-outer order
//   CSV trace  : header "x,y", one point per line
//   JSON       : {"config": {...}, "tau": t, "grid": {nx,ny,xmin,xmax,ymin,ymax},
//                 "values": [row-major, y-outer]}
//   SVG        : viewBox "0 0 800 800", x -> [0,800], y -> [800,0], frame rect,
//                one unfilled path per trace
// Numbers in CSV are printed with 17 significant digits and round-trip exactly.

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "qwhorl/grid.hpp"
#include "qwhorl/liouville.hpp"

namespace qwhorl {

struct DistributionField {
    GridSpec grid;
    std::vector<double> values;  // values[j * nx + i]
    double tau = 0.0;

    double at(std::size_t i, std::size_t j) const { return values[j * grid.nx + i]; }
};

// Throws std::invalid_argument for an invalid grid.
DistributionField sample_grid(const GaussianState& state, double t, const GridSpec& grid);

// Marching squares at `level`. Returns an empty list when 0 < level < 1 fails
// or the level never crosses the field. Ambiguous saddle cells are resolved
// with the mean of the four corner values.
std::vector<ContourTrace> extract_level_set(const DistributionField& field, double level);

struct Snapshot {
    nlohmann::json config = nlohmann::json::object();
    double tau = 0.0;
    GridSpec grid;
    std::vector<double> values;
};

// Canonical description of a state for the `config` block of an output file.
nlohmann::json describe_state(const GaussianState& state, DeformationKind kind);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

// Writers return the number of bytes written and throw IoError on failure.
std::size_t write_csv(const DistributionField& field, const std::filesystem::path& path);
std::size_t write_csv(const ContourTrace& trace, const std::filesystem::path& path);
std::size_t write_json(const Snapshot& snapshot, const std::filesystem::path& path);
std::size_t write_svg(const std::vector<ContourTrace>& traces, const GridSpec& grid,
                      const std::filesystem::path& path, const std::string& description = {});

CsvTable read_csv(const std::filesystem::path& path);

// Throws IoError when the file is unreadable or violates the schema
// (including values.size() != nx * ny).
Snapshot read_json(const std::filesystem::path& path);

// In-memory renderers behind the writers.
std::string render_csv(const DistributionField& field);
std::string render_csv(const ContourTrace& trace);
std::string render_svg(const std::vector<ContourTrace>& traces, const GridSpec& grid,
                       const std::string& description = {});

// Writes `content` to `path`, creating parent directories. Throws IoError.
std::size_t write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace qwhorl
