// Snapshot file format: plain-text matrix of collocation values.
//   line 1: "# hydroalpha field Nx=<..> Nz=<..> Lx=<..>"
//   line 2: "# hydroalpha <version> config=<hash>"
//   then Nz rows x Nx columns, row j at z_nodes[j].
#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "hydroalpha/field.hpp"
#include "hydroalpha/version.hpp"

namespace hydroalpha {

inline std::string format_real(Real v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline void write_snapshot(const std::string& path, const Field& f, const std::string& config_hash = "none") {
    const Mat vals = to_values(f);
    std::ofstream out(path);
    if (!out) throw ParameterError("write_snapshot: cannot open " + path);
    out << "# hydroalpha field Nx=" << f.grid->Nx << " Nz=" << f.grid->Nz
        << " Lx=" << format_real(f.grid->Lx) << "\n";
    out << "# hydroalpha " << kVersion << " config=" << config_hash << "\n";
    for (int j = 0; j < f.grid->Nz; ++j) {
        for (int i = 0; i < f.grid->Nx; ++i) {
            if (i) out << ' ';
            out << format_real(vals(j, i));
        }
        out << '\n';
    }
}

inline Field read_snapshot(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("read_snapshot: cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw ParameterError("read_snapshot: empty file " + path);
    int Nx = 0, Nz = 0;
    double Lx = 0.0;
    if (std::sscanf(line.c_str(), "# hydroalpha field Nx=%d Nz=%d Lx=%lf", &Nx, &Nz, &Lx) != 3)
        throw ParameterError("read_snapshot: bad header in " + path);
    auto grid = create_grid(Nx, Nz, Lx);
    Mat vals(Nz, Nx);
    int j = 0;
    while (j < Nz && std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream row(line);
        for (int i = 0; i < Nx; ++i)
            if (!(row >> vals(j, i))) throw ParameterError("read_snapshot: short row in " + path);
        ++j;
    }
    if (j != Nz) throw ParameterError("read_snapshot: expected " + std::to_string(Nz) + " rows in " + path);
    return to_coeffs(grid, vals);
}

}  // namespace hydroalpha
