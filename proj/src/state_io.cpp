#include "qbat/state_io.hpp"

#include <fstream>

#include <json.hpp>

#include "qbat/twoqubit.hpp"

namespace qbat {

namespace {

using nlohmann::json;

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open file '" + path.string() + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw FileError("invalid JSON in '" + path.string() + "': " + e.what());
    }
    return j;
}

cplx parse_entry(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw FileError("complex entries must be [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

ComplexMatrix parse_matrix(const json& j, const char* what) {
    if (!j.is_array() || j.empty()) throw FileError(std::string(what) + " must be a nonempty array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) throw FileError(std::string(what) + " rows must be nonempty arrays");
    ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw FileError(std::string(what) + " rows must all have the same length");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_entry(j[r][c]);
    }
    return m;
}

json dump_matrix(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

DensityOperator load_state(const std::filesystem::path& path) {
    const json j = read_json(path);
    try {
        if (j.contains("pure")) {
            const json& amps = j.at("pure");
            if (!amps.is_array() || amps.size() != 4)
                throw FileError("\"pure\" must hold exactly 4 two-qubit amplitudes");
            std::array<cplx, 4> c{};
            for (std::size_t i = 0; i < 4; ++i) c[i] = parse_entry(amps[i]);
            return density_from_coeffs(PureCoefficients(c));
        }
        const std::size_t da = j.at("dim_a").get<std::size_t>();
        const std::size_t db = j.at("dim_b").get<std::size_t>();
        return DensityOperator(da, db, parse_matrix(j.at("matrix"), "\"matrix\""));
    } catch (const json::exception& e) {
        throw FileError(std::string("state file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FileError(std::string("state file: ") + e.what());
    }
}

void save_state(const std::filesystem::path& path, const DensityOperator& rho) {
    json j;
    j["dim_a"] = rho.dim_a();
    j["dim_b"] = rho.dim_b();
    j["matrix"] = dump_matrix(rho.matrix());
    std::ofstream out(path);
    if (!out) throw FileError("cannot write file '" + path.string() + "'");
    out << j.dump(2) << "\n";
}

HamiltonianFile load_hamiltonian(const std::filesystem::path& path) {
    const json j = read_json(path);
    try {
        const std::string type = j.at("type").get<std::string>();
        if (type == "two_qubit_zz") {
            const TwoQubitZZ zz(j.at("eps_a").get<double>(), j.at("eps_b").get<double>());
            return {zz.local(), zz};
        }
        if (type == "local") {
            const ComplexMatrix ha = parse_matrix(j.at("h_a"), "\"h_a\"");
            const ComplexMatrix hb = parse_matrix(j.at("h_b"), "\"h_b\"");
            return {LocalHamiltonian{HermitianOperator(ha), HermitianOperator(hb)}, std::nullopt};
        }
        throw FileError("hamiltonian type must be \"two_qubit_zz\" or \"local\"");
    } catch (const json::exception& e) {
        throw FileError(std::string("hamiltonian file: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FileError(std::string("hamiltonian file: ") + e.what());
    }
}

}  // namespace qbat
