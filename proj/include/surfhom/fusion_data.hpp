#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "surfhom/linalg.hpp"
#include "surfhom/report.hpp"

namespace surfhom {

struct fusion_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct unsupported_multiplicity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Skeletal presentation of a unitary braided fusion category. F- and
// R-symbols are keyed without multiplicity indices; categories with a fusion
// coefficient above 1 load for dimension-only work, but any F/R lookup
// raises unsupported_multiplicity.
//
// F convention: |((ab)_e c)_d> = sum_f [F^{abc}_d]_{ef} |(a(bc)_f)_d>, with
// every F-matrix carrying a trivial label (a, b or c equal to the unit)
// fixed to the identity.
struct FusionData {
    std::vector<std::string> simples;
    int unit = 0;
    std::vector<int> dual;
    std::vector<long> fusion_tensor;  // N[a][b][c], flattened
    std::map<uint64_t, cplx> f_symbols;
    std::map<uint64_t, cplx> r_symbols;
    std::vector<double> qdim;
    std::vector<cplx> twist;
    // Snake coefficient per simple: cap_X = kappa_X * cup_{dual X}^dagger,
    // fixed by the zig-zag identity.
    std::vector<cplx> kappa;
    std::string content_hash;

    int rank() const { return static_cast<int>(simples.size()); }

    long N(int a, int b, int c) const {
        return fusion_tensor[(static_cast<size_t>(a) * rank() + b) * rank() + c];
    }
    bool multiplicity_free() const;

    // Trivial-label F-matrices are the identity; others come from the table.
    cplx F(int a, int b, int c, int d, int e, int f) const;
    cplx R(int a, int b, int c) const;

    double global_dim() const {
        double s = 0;
        for (double d : qdim) s += d * d;
        return s;
    }

    int index_of(const std::string& label) const;

    // Checks every structural invariant: pentagon, both hexagons, F-matrix
    // unitarity, R unit-modulus, fusion associativity, rigidity of duals,
    // dimension homomorphism, ribbon compatibility and snake consistency.
    ValidationReport verify(int threads = 0) const;
};

std::vector<double> derive_qdims(const FusionData& data);
std::vector<cplx> derive_twists(const FusionData& data);

// Parse a category description document (JSON text, schema in README).
FusionData load_category(const std::string& json_text);
FusionData load_category_file(const std::string& path);

// Pointed category on a product of cyclic groups with braiding given by a
// bicharacter: R(g, h) = exp(2 pi i * sum_jk q_jk g_j h_k).
FusionData pointed_category(const std::vector<long>& orders,
                            const std::vector<std::vector<double>>& bichar);

// Builtins: "trivial", "fib", "ising", "pointed:<orders>:<bichar>"
// (orders comma-separated, bichar rows semicolon-separated rationals).
FusionData builtin_category(const std::string& name);
bool is_builtin_name(const std::string& name);

namespace detail {
uint64_t fkey(int a, int b, int c, int d, int e, int f);
uint64_t rkey(int a, int b, int c);
}  // namespace detail

}  // namespace surfhom
