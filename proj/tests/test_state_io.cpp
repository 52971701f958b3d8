#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "qbat/random.hpp"
#include "qbat/state_io.hpp"

using namespace qbat;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name, const std::string& content = "")
        : path(std::filesystem::temp_directory_path() / name) {
        if (!content.empty()) {
            std::ofstream out(path);
            out << content;
        }
    }
    ~TempFile() { std::error_code ec; std::filesystem::remove(path, ec); }
};

}  // namespace

TEST_CASE("pure state files") {
    TempFile f("qbat_pure.json", R"({"pure": [[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]]})");
    const DensityOperator rho = load_state(f.path);
    CHECK(rho.dim_a() == 2);
    CHECK(rho.matrix()(0, 0).real() == 1.0);
}

TEST_CASE("matrix state files round-trip") {
    Rng rng(9);
    const DensityOperator rho = random_density(2, 2, rng);
    TempFile f("qbat_roundtrip.json");
    save_state(f.path, rho);
    const DensityOperator back = load_state(f.path);
    CHECK(max_abs_diff(back.matrix(), rho.matrix()) < 1e-12);
    CHECK(back.dim_a() == rho.dim_a());
    CHECK(back.dim_b() == rho.dim_b());
}

TEST_CASE("invalid state files name the violated invariant") {
    SUBCASE("unnormalized pure amplitudes") {
        TempFile f("qbat_badpure.json",
                   R"({"pure": [[1.0, 0.0], [1.0, 0.0], [0.0, 0.0], [0.0, 0.0]]})");
        CHECK_THROWS_WITH_AS(load_state(f.path),
                             doctest::Contains("not normalized"), FileError);
    }
    SUBCASE("bad trace") {
        TempFile f("qbat_badtrace.json",
                   R"({"dim_a": 2, "dim_b": 2, "matrix": [
                        [[0.5,0],[0,0],[0,0],[0,0]],
                        [[0,0],[0.5,0],[0,0],[0,0]],
                        [[0,0],[0,0],[0.5,0],[0,0]],
                        [[0,0],[0,0],[0,0],[0.1]]]})");
        CHECK_THROWS_AS(load_state(f.path), FileError);
    }
    SUBCASE("not json") {
        TempFile f("qbat_notjson.json", "not json at all");
        CHECK_THROWS_WITH_AS(load_state(f.path), doctest::Contains("invalid JSON"), FileError);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_WITH_AS(load_state("/nonexistent/qbat.json"),
                             doctest::Contains("cannot open"), FileError);
    }
}

TEST_CASE("hamiltonian files") {
    SUBCASE("two qubit splitting form") {
        TempFile f("qbat_zz.json", R"({"type": "two_qubit_zz", "eps_a": 2.0, "eps_b": 1.0})");
        const HamiltonianFile h = load_hamiltonian(f.path);
        REQUIRE(h.zz.has_value());
        CHECK(h.zz->eps_a == 2.0);
        CHECK(full_hamiltonian(h.hamiltonian).matrix()(0, 0).real() == 3.0);
    }
    SUBCASE("general local form") {
        TempFile f("qbat_local.json", R"({"type": "local",
            "h_a": [[[1,0],[0,0]],[[0,0],[-1,0]]],
            "h_b": [[[0.5,0],[0,0]],[[0,0],[-0.5,0]]]})");
        const HamiltonianFile h = load_hamiltonian(f.path);
        CHECK_FALSE(h.zz.has_value());
        CHECK(h.hamiltonian.h_a.dim() == 2);
    }
    SUBCASE("bad splitting order is rejected") {
        TempFile f("qbat_badzz.json", R"({"type": "two_qubit_zz", "eps_a": 1.0, "eps_b": 2.0})");
        CHECK_THROWS_WITH_AS(load_hamiltonian(f.path),
                             doctest::Contains("eps_a > eps_b"), FileError);
    }
    SUBCASE("non-hermitian blocks are rejected") {
        TempFile f("qbat_nonherm.json", R"({"type": "local",
            "h_a": [[[1,0],[1,0]],[[0,0],[-1,0]]],
            "h_b": [[[0.5,0],[0,0]],[[0,0],[-0.5,0]]]})");
        CHECK_THROWS_WITH_AS(load_hamiltonian(f.path),
                             doctest::Contains("Hermitian"), FileError);
    }
}
