#include "wgqed/app/density_file.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>

namespace wgqed::app {

namespace {

std::string shape_message(const char* key) { return std::string("\"") + key + "\" must be a 4x4 array"; }

void read_part(const nlohmann::json& j, const char* key, Mat4& m, bool real) {
    if (!j.contains(key)) {
        if (real) throw DensityError("shape", "missing \"re\" matrix");
        return;
    }
    const auto& rows = j.at(key);
    if (!rows.is_array() || rows.size() != 4) throw DensityError("shape", shape_message(key));
    for (int r = 0; r < 4; ++r) {
        const auto& row = rows[r];
        if (!row.is_array() || row.size() != 4) throw DensityError("shape", shape_message(key));
        for (int c = 0; c < 4; ++c) {
            if (!row[c].is_number()) throw DensityError("shape", std::string("non-numeric entry in \"") + key + "\"");
            const double v = row[c].get<double>();
            if (real)
                m(r, c).real(v);
            else
                m(r, c).imag(v);
        }
    }
}

}  // namespace

DickeDensity parse_density_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open density file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("malformed JSON in " + path + ": " + e.what());
    }
    if (!j.is_object()) throw DensityError("shape", "density file must hold an object with \"re\" and \"im\"");
    Mat4 m = Mat4::Zero();
    read_part(j, "re", m, true);
    read_part(j, "im", m, false);
    check_density(m);
    return DickeDensity::from_matrix(m);
}

DickeDensity resolve_initial(const std::string& spec) {
    const auto& names = preset_names();
    if (std::find(names.begin(), names.end(), spec) != names.end()) return preset_state(spec);
    std::ifstream probe(spec);
    if (!probe) preset_state(spec);  // throws with the list of valid presets
    return parse_density_file(spec);
}

}  // namespace wgqed::app
