#include "qwhorl/field.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qwhorl/errors.hpp"

namespace qwhorl {

namespace {

constexpr double kCanvas = 800.0;

void append_number(std::string& out, double v, const char* format = "%.17g") {
    char buf[40];
    std::snprintf(buf, sizeof(buf), format, v);
    out += buf;
}

// Marching-squares bookkeeping. Every crossing point is keyed by the lattice
// edge it lies on, so neighbouring cells share points exactly and the
// segments can be stitched into polylines by edge id.
class LevelSetBuilder {
public:
    LevelSetBuilder(const DistributionField& field, double level)
        : field_(field),
          level_(level),
          nx_(field.grid.nx),
          ny_(field.grid.ny),
          h_edges_((nx_ - 1) * ny_),
          links_(h_edges_ + nx_ * (ny_ - 1)) {}

    std::vector<ContourTrace> build() {
        for (std::size_t j = 0; j + 1 < ny_; ++j) {
            for (std::size_t i = 0; i + 1 < nx_; ++i) add_cell(i, j);
        }
        return stitch();
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    struct Link {
        std::array<std::size_t, 2> to{kNone, kNone};
        int degree = 0;
    };

    std::size_t h_edge(std::size_t i, std::size_t j) const { return j * (nx_ - 1) + i; }
    std::size_t v_edge(std::size_t i, std::size_t j) const { return h_edges_ + j * nx_ + i; }
    bool inside(std::size_t i, std::size_t j) const { return field_.at(i, j) > level_; }

    void connect(std::size_t a, std::size_t b) {
        auto push = [this](std::size_t from, std::size_t to) {
            Link& l = links_[from];
            if (l.degree < 2) l.to[l.degree++] = to;
        };
        push(a, b);
        push(b, a);
    }

    void add_cell(std::size_t i, std::size_t j) {
        const int mask = (inside(i, j) ? 1 : 0) | (inside(i + 1, j) ? 2 : 0) |
                         (inside(i + 1, j + 1) ? 4 : 0) | (inside(i, j + 1) ? 8 : 0);
        if (mask == 0 || mask == 15) return;

        const std::size_t bottom = h_edge(i, j);
        const std::size_t right = v_edge(i + 1, j);
        const std::size_t top = h_edge(i, j + 1);
        const std::size_t left = v_edge(i, j);

        if (mask == 5 || mask == 10) {
            const double centre = 0.25 * (field_.at(i, j) + field_.at(i + 1, j) +
                                          field_.at(i + 1, j + 1) + field_.at(i, j + 1));
            const bool centre_inside = centre > level_;
            // Cut off the corners that are not joined through the centre.
            const bool cut_bl_tr = (mask == 5) != centre_inside;
            if (cut_bl_tr) {
                connect(bottom, left);
                connect(right, top);
            } else {
                connect(bottom, right);
                connect(top, left);
            }
            return;
        }

        std::array<std::size_t, 4> crossing{};
        int n = 0;
        if (((mask >> 0) ^ (mask >> 1)) & 1) crossing[n++] = bottom;
        if (((mask >> 1) ^ (mask >> 2)) & 1) crossing[n++] = right;
        if (((mask >> 2) ^ (mask >> 3)) & 1) crossing[n++] = top;
        if (((mask >> 3) ^ (mask >> 0)) & 1) crossing[n++] = left;
        if (n == 2) connect(crossing[0], crossing[1]);
    }

    PhasePoint crossing_point(std::size_t edge) const {
        std::size_t i0, j0, i1, j1;
        if (edge < h_edges_) {
            j0 = j1 = edge / (nx_ - 1);
            i0 = edge % (nx_ - 1);
            i1 = i0 + 1;
        } else {
            const std::size_t e = edge - h_edges_;
            j0 = e / nx_;
            i0 = i1 = e % nx_;
            j1 = j0 + 1;
        }
        const double va = field_.at(i0, j0);
        const double vb = field_.at(i1, j1);
        const double t = (level_ - va) / (vb - va);
        const PhasePoint a = field_.grid.node(i0, j0);
        const PhasePoint b = field_.grid.node(i1, j1);
        return PhasePoint(a.value() + t * (b.value() - a.value()));
    }

    ContourTrace walk(std::size_t start, std::vector<bool>& seen) const {
        ContourTrace trace;
        trace.tau = field_.tau;
        std::size_t prev = kNone;
        std::size_t cur = start;
        while (cur != kNone && !seen[cur]) {
            seen[cur] = true;
            const PhasePoint p = crossing_point(cur);
            if (trace.points.empty() || !(trace.points.back() == p)) trace.points.push_back(p);
            const Link& l = links_[cur];
            std::size_t next = kNone;
            for (int k = 0; k < l.degree; ++k) {
                if (l.to[k] != prev && !seen[l.to[k]]) {
                    next = l.to[k];
                    break;
                }
            }
            if (next == kNone && l.degree == 2 && (l.to[0] == start || l.to[1] == start) &&
                prev != kNone) {
                trace.closed = true;
            }
            prev = cur;
            cur = next;
        }
        if (trace.closed && trace.points.size() > 1 && trace.points.front() == trace.points.back()) {
            trace.points.pop_back();
        }
        return trace;
    }

    std::vector<ContourTrace> stitch() const {
        std::vector<ContourTrace> traces;
        std::vector<bool> seen(links_.size(), false);
        // Open chains start at their loose ends (boundary crossings).
        for (std::size_t e = 0; e < links_.size(); ++e) {
            if (links_[e].degree == 1 && !seen[e]) keep(traces, walk(e, seen));
        }
        for (std::size_t e = 0; e < links_.size(); ++e) {
            if (links_[e].degree == 2 && !seen[e]) keep(traces, walk(e, seen));
        }
        return traces;
    }

    static void keep(std::vector<ContourTrace>& traces, ContourTrace trace) {
        if (trace.points.size() >= 2) traces.push_back(std::move(trace));
    }

    const DistributionField& field_;
    double level_;
    std::size_t nx_;
    std::size_t ny_;
    std::size_t h_edges_;
    std::vector<Link> links_;
};

}  // namespace

DistributionField sample_grid(const GaussianState& state, double t, const GridSpec& grid) {
    grid.validate();
    DistributionField field;
    field.grid = grid;
    field.tau = state.params.omega() * t;
    field.values.resize(grid.size());
    for (std::size_t j = 0; j < grid.ny; ++j) {
        for (std::size_t i = 0; i < grid.nx; ++i) {
            field.values[j * grid.nx + i] = evolved_distribution(grid.node(i, j), state, t);
        }
    }
    return field;
}

std::vector<ContourTrace> extract_level_set(const DistributionField& field, double level) {
    if (!(level > 0.0 && level < 1.0)) return {};
    field.grid.validate();
    if (field.values.size() != field.grid.size()) {
        throw std::invalid_argument("extract_level_set: values size does not match grid");
    }
    return LevelSetBuilder(field, level).build();
}

nlohmann::json describe_state(const GaussianState& state, DeformationKind kind) {
    nlohmann::json j;
    j["params"] = {{"q", state.params.q()},
                   {"lambda", state.params.lambda()},
                   {"mass", state.params.mass()},
                   {"omega", state.params.omega()},
                   {"hbar", state.params.hbar()}};
    j["kind"] = std::string(to_string(kind));
    j["profile"] = {{"name", std::string(to_string(state.profile.kind))}, {"chi", state.profile.chi}};
    j["representation"] = std::string(to_string(state.representation));
    j["center"] = {{"re", state.center.re()}, {"im", state.center.im()}};
    j["axes"] = "grid axes are (Re z, Im z) of the representation's complex amplitude z; "
                "canonical (x, p) = sqrt(2) (Re z, Im z) in natural units";
    return j;
}

std::string render_csv(const DistributionField& field) {
    std::string out = "x,y,value\n";
    out.reserve(out.size() + field.values.size() * 64);
    for (std::size_t j = 0; j < field.grid.ny; ++j) {
        for (std::size_t i = 0; i < field.grid.nx; ++i) {
            const PhasePoint p = field.grid.node(i, j);
            append_number(out, p.re());
            out += ',';
            append_number(out, p.im());
            out += ',';
            append_number(out, field.at(i, j));
            out += '\n';
        }
    }
    return out;
}

std::string render_csv(const ContourTrace& trace) {
    std::string out = "x,y\n";
    for (const auto& p : trace.points) {
        append_number(out, p.re());
        out += ',';
        append_number(out, p.im());
        out += '\n';
    }
    return out;
}

std::string render_svg(const std::vector<ContourTrace>& traces, const GridSpec& grid,
                       const std::string& description) {
    const auto map_x = [&](double x) { return (x - grid.xmin) / (grid.xmax - grid.xmin) * kCanvas; };
    const auto map_y = [&](double y) {
        return kCanvas - (y - grid.ymin) / (grid.ymax - grid.ymin) * kCanvas;
    };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n";
    if (!description.empty()) {
        out += "<desc>";
        for (char c : description) {
            switch (c) {
                case '&': out += "&amp;"; break;
                case '<': out += "&lt;"; break;
                case '>': out += "&gt;"; break;
                default: out += c;
            }
        }
        out += "</desc>\n";
    }
    out += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"none\" stroke=\"black\" "
           "stroke-width=\"1\"/>\n";
    for (const auto& trace : traces) {
        if (trace.points.empty()) continue;
        out += "<path fill=\"none\" stroke=\"black\" stroke-width=\"1\" d=\"";
        for (std::size_t k = 0; k < trace.points.size(); ++k) {
            out += k == 0 ? "M" : " L";
            append_number(out, map_x(trace.points[k].re()), "%.6f");
            out += ' ';
            append_number(out, map_y(trace.points[k].im()), "%.6f");
        }
        if (trace.closed) out += " Z";
        out += "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

std::size_t write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError(path.string(), "cannot create directory: " + ec.message());
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError(path.string(), "cannot open for writing");
    os.write(content.data(), static_cast<std::streamsize>(content.size()));
    os.close();
    if (!os) throw IoError(path.string(), "write failed");
    return content.size();
}

std::size_t write_csv(const DistributionField& field, const std::filesystem::path& path) {
    return write_text_file(path, render_csv(field));
}

std::size_t write_csv(const ContourTrace& trace, const std::filesystem::path& path) {
    return write_text_file(path, render_csv(trace));
}

std::size_t write_json(const Snapshot& snapshot, const std::filesystem::path& path) {
    nlohmann::json j;
    j["config"] = snapshot.config;
    j["tau"] = snapshot.tau;
    j["grid"] = {{"nx", snapshot.grid.nx},     {"ny", snapshot.grid.ny},
                 {"xmin", snapshot.grid.xmin}, {"xmax", snapshot.grid.xmax},
                 {"ymin", snapshot.grid.ymin}, {"ymax", snapshot.grid.ymax}};
    j["values"] = snapshot.values;
    return write_text_file(path, j.dump() + "\n");
}

std::size_t write_svg(const std::vector<ContourTrace>& traces, const GridSpec& grid,
                      const std::filesystem::path& path, const std::string& description) {
    return write_text_file(path, render_svg(traces, grid, description));
}

CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError(path.string(), "cannot open for reading");
    CsvTable table;
    std::string line;
    if (!std::getline(is, line)) throw IoError(path.string(), "missing header");
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) table.header.push_back(cell);
    }
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        const char* p = line.c_str();
        while (*p != '\0') {
            char* end = nullptr;
            row.push_back(std::strtod(p, &end));
            if (end == p) throw IoError(path.string(), "malformed number in line: " + line);
            p = *end == ',' ? end + 1 : end;
        }
        if (row.size() != table.header.size()) {
            throw IoError(path.string(), "column count mismatch in line: " + line);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

Snapshot read_json(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError(path.string(), "cannot open for reading");
    try {
        const nlohmann::json j = nlohmann::json::parse(is);
        Snapshot s;
        s.config = j.at("config");
        s.tau = j.at("tau").get<double>();
        const auto& g = j.at("grid");
        s.grid = {g.at("xmin").get<double>(), g.at("xmax").get<double>(),
                  g.at("ymin").get<double>(), g.at("ymax").get<double>(),
                  g.at("nx").get<std::size_t>(), g.at("ny").get<std::size_t>()};
        s.values = j.at("values").get<std::vector<double>>();
        if (s.values.size() != s.grid.nx * s.grid.ny) {
            throw IoError(path.string(), "values length does not equal nx * ny");
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(path.string(), std::string("invalid snapshot: ") + e.what());
    }
}

}  // namespace qwhorl
