#include "surfhom/fusion_data.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <mutex>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "surfhom/parallel.hpp"

namespace surfhom {

using nlohmann::json;

namespace detail {

uint64_t fkey(int a, int b, int c, int d, int e, int f) {
    uint64_t k = 0;
    for (int x : {a, b, c, d, e, f}) k = (k << 10) | static_cast<uint64_t>(x);
    return k;
}

uint64_t rkey(int a, int b, int c) {
    return (static_cast<uint64_t>(a) << 20) | (static_cast<uint64_t>(b) << 10) |
           static_cast<uint64_t>(c);
}

}  // namespace detail

int FusionData::index_of(const std::string& label) const {
    for (int i = 0; i < rank(); ++i)
        if (simples[i] == label) return i;
    throw fusion_error("unknown simple label '" + label + "'");
}

bool FusionData::multiplicity_free() const {
    for (long n : fusion_tensor)
        if (n > 1) return false;
    return true;
}

cplx FusionData::F(int a, int b, int c, int d, int e, int f) const {
    if (N(a, b, e) > 1 || N(e, c, d) > 1 || N(b, c, f) > 1 || N(a, f, d) > 1)
        throw unsupported_multiplicity("F-symbol lookup needs multiplicity indices at (" +
                                       simples[a] + "," + simples[b] + "," + simples[c] + ")");
    if (N(a, b, e) == 0 || N(e, c, d) == 0 || N(b, c, f) == 0 || N(a, f, d) == 0) return 0.0;
    if (a == unit) return (e == b && f == d) ? 1.0 : 0.0;
    if (b == unit) return (e == a && f == c) ? 1.0 : 0.0;
    if (c == unit) return (e == d && f == b) ? 1.0 : 0.0;
    auto it = f_symbols.find(detail::fkey(a, b, c, d, e, f));
    return it == f_symbols.end() ? cplx(0.0) : it->second;
}

cplx FusionData::R(int a, int b, int c) const {
    if (N(a, b, c) > 1)
        throw unsupported_multiplicity("R-symbol lookup needs multiplicity indices at (" +
                                       simples[a] + "," + simples[b] + ")");
    if (N(a, b, c) == 0) return 0.0;
    if (a == unit || b == unit) return 1.0;
    auto it = r_symbols.find(detail::rkey(a, b, c));
    return it == r_symbols.end() ? cplx(0.0) : it->second;
}

std::vector<double> derive_qdims(const FusionData& data) {
    const int r = data.rank();
    std::vector<double> dims(r, 1.0);
    for (int a = 0; a < r; ++a) {
        Eigen::MatrixXd Na(r, r);
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c) Na(b, c) = static_cast<double>(data.N(a, b, c));
        // Perron-Frobenius eigenvalue by power iteration on the column-sum
        // shifted matrix (shift keeps periodic fusion matrices convergent).
        Eigen::MatrixXd M = Na + Eigen::MatrixXd::Identity(r, r);
        Eigen::VectorXd v = Eigen::VectorXd::Ones(r);
        double lambda = 0.0;
        bool converged = false;
        for (int it = 0; it < 100000; ++it) {
            Eigen::VectorXd w = M * v;
            double nw = w.norm();
            if (nw == 0.0) break;
            w /= nw;
            double l = w.dot(M * w);
            if (std::abs(l - lambda) < 1e-14 * std::max(1.0, std::abs(l))) {
                lambda = l;
                converged = true;
                break;
            }
            lambda = l;
            v = w;
        }
        if (!converged)
            throw fusion_error("Perron-Frobenius iteration did not converge for simple " +
                               data.simples[a]);
        dims[a] = lambda - 1.0;
    }
    dims[data.unit] = 1.0;
    return dims;
}

std::vector<cplx> derive_twists(const FusionData& data) {
    const int r = data.rank();
    std::vector<cplx> tw(r, 1.0);
    for (int a = 0; a < r; ++a) {
        if (a == data.unit) continue;
        cplx t = 0.0;
        for (int c = 0; c < r; ++c) {
            long n = data.N(a, a, c);
            if (n == 0) continue;
            if (n > 1)
                throw unsupported_multiplicity("twist derivation at self-fusion of " +
                                               data.simples[a]);
            t += (data.qdim[c] / data.qdim[a]) * data.R(a, a, c);
        }
        tw[a] = t;
    }
    return tw;
}

static std::vector<cplx> derive_kappas(const FusionData& data) {
    std::vector<cplx> ks(data.rank(), 1.0);
    for (int x = 0; x < data.rank(); ++x) {
        if (x == data.unit) continue;
        cplx f11 = data.F(x, data.dual[x], x, x, data.unit, data.unit);
        if (std::abs(f11) > 1e-12) ks[x] = 1.0 / (data.qdim[x] * std::conj(f11));
    }
    return ks;
}

// ---------------------------------------------------------------------------
// verify

ValidationReport FusionData::verify(int threads) const {
    ValidationReport rep;
    const int r = rank();

    // Structural integer identities first.
    double unit_res = 0.0;
    for (int a = 0; a < r; ++a)
        for (int c = 0; c < r; ++c) {
            unit_res = std::max(unit_res, std::abs(double(N(a, unit, c) - (a == c ? 1 : 0))));
            unit_res = std::max(unit_res, std::abs(double(N(unit, a, c) - (a == c ? 1 : 0))));
        }
    rep.add("unit_constraints", unit_res, 0.5);

    double rigid_res = 0.0;
    for (int a = 0; a < r; ++a) {
        if (dual[dual[a]] != a) rigid_res = std::max(rigid_res, 1.0);
        for (int b = 0; b < r; ++b)
            rigid_res = std::max(rigid_res,
                                 std::abs(double(N(a, b, unit) - (b == dual[a] ? 1 : 0))));
    }
    if (dual[unit] != unit) rigid_res = std::max(rigid_res, 1.0);
    rep.add("rigidity", rigid_res, 0.5);

    double assoc_res = 0.0;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int d = 0; d < r; ++d) {
                    long lhs = 0, rhs = 0;
                    for (int e = 0; e < r; ++e) lhs += N(a, b, e) * N(e, c, d);
                    for (int f = 0; f < r; ++f) rhs += N(b, c, f) * N(a, f, d);
                    assoc_res = std::max(assoc_res, std::abs(double(lhs - rhs)));
                }
    rep.add("fusion_associativity", assoc_res, 0.5);

    double dimhom_res = 0.0, dimdual_res = 0.0;
    for (int a = 0; a < r; ++a) {
        dimdual_res = std::max(dimdual_res, std::abs(qdim[a] - qdim[dual[a]]));
        if (qdim[a] < 1.0 - 1e-9) dimdual_res = std::max(dimdual_res, 1.0 - qdim[a]);
        for (int b = 0; b < r; ++b) {
            double s = 0.0;
            for (int c = 0; c < r; ++c) s += N(a, b, c) * qdim[c];
            dimhom_res = std::max(dimhom_res, std::abs(qdim[a] * qdim[b] - s));
        }
    }
    rep.add("dimension_homomorphism", dimhom_res, kEntryTol * 10);
    rep.add("dual_dimensions", dimdual_res, kEntryTol * 10);

    if (!multiplicity_free()) {
        rep.note("fusion multiplicities above 1: coherence checks skipped");
        return rep;
    }

    // Pentagon:  F^{fcd}_e[g,l] F^{abl}_e[f,k]
    //          = sum_h F^{abc}_g[f,h] F^{ahd}_e[g,k] F^{bcd}_k[h,l]
    const int nthreads = thread_budget(threads);
    std::vector<double> pent_acc(nthreads, 0.0);
    parallel_for(r, nthreads, [&](long lo, long hi) {
        int slot = static_cast<int>(lo * nthreads / std::max<long>(r, 1));
        slot = std::min(slot, nthreads - 1);
        double& acc = pent_acc[slot];
        for (long a = lo; a < hi; ++a)
            for (int b = 0; b < r; ++b)
                for (int c = 0; c < r; ++c)
                    for (int d = 0; d < r; ++d)
                        for (int e = 0; e < r; ++e)
                            for (int f = 0; f < r; ++f) {
                                if (!N(a, b, f)) continue;
                                for (int g = 0; g < r; ++g) {
                                    if (!N(f, c, g) || !N(g, d, e)) continue;
                                    for (int k = 0; k < r; ++k)
                                        for (int l = 0; l < r; ++l) {
                                            if (!N(c, d, l) || !N(b, l, k) || !N(a, k, e))
                                                continue;
                                            cplx lhs = F(f, c, d, e, g, l) * F(a, b, l, e, f, k);
                                            cplx rhs = 0.0;
                                            for (int h = 0; h < r; ++h)
                                                rhs += F(a, b, c, g, f, h) * F(a, h, d, e, g, k) *
                                                       F(b, c, d, k, h, l);
                                            acc = std::max(acc, std::abs(lhs - rhs));
                                        }
                                }
                            }
    });
    double pent_res = *std::max_element(pent_acc.begin(), pent_acc.end());
    rep.add("pentagon", pent_res, kCheckTol);

    // Hexagons:  R^{ca}_e F^{acb}_d[e,g] R^{cb}_g
    //          = sum_f F^{cab}_d[e,f] R^{cf}_d F^{abc}_d[f,g]
    // and the same with every R conjugated.
    double hex1 = 0.0, hex2 = 0.0;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int d = 0; d < r; ++d)
                    for (int e = 0; e < r; ++e) {
                        if (!N(c, a, e) || !N(e, b, d)) continue;
                        for (int g = 0; g < r; ++g) {
                            if (!N(c, b, g) || !N(a, g, d)) continue;
                            cplx lhs1 = R(c, a, e) * F(a, c, b, d, e, g) * R(c, b, g);
                            cplx lhs2 = std::conj(R(c, a, e)) * F(a, c, b, d, e, g) *
                                        std::conj(R(c, b, g));
                            cplx rhs1 = 0.0, rhs2 = 0.0;
                            for (int f = 0; f < r; ++f) {
                                if (!N(a, b, f) || !N(c, f, d)) continue;
                                cplx base = F(c, a, b, d, e, f) * F(a, b, c, d, f, g);
                                rhs1 += base * R(c, f, d);
                                rhs2 += base * std::conj(R(c, f, d));
                            }
                            hex1 = std::max(hex1, std::abs(lhs1 - rhs1));
                            hex2 = std::max(hex2, std::abs(lhs2 - rhs2));
                        }
                    }
    rep.add("hexagon_forward", hex1, kCheckTol);
    rep.add("hexagon_inverse", hex2, kCheckTol);

    // Unitarity of every F-matrix (rows/cols indexed by admissible e, f).
    double funit_res = 0.0;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int d = 0; d < r; ++d) {
                    std::vector<int> es, fs;
                    for (int e = 0; e < r; ++e)
                        if (N(a, b, e) && N(e, c, d)) es.push_back(e);
                    for (int f = 0; f < r; ++f)
                        if (N(b, c, f) && N(a, f, d)) fs.push_back(f);
                    if (es.empty()) continue;
                    if (es.size() != fs.size()) {
                        funit_res = std::max(funit_res, 1.0);
                        continue;
                    }
                    Mat M(es.size(), fs.size());
                    for (size_t i = 0; i < es.size(); ++i)
                        for (size_t j = 0; j < fs.size(); ++j)
                            M(i, j) = F(a, b, c, d, es[i], fs[j]);
                    funit_res = std::max(
                        funit_res,
                        max_abs(M * M.adjoint() - Mat::Identity(es.size(), es.size())));
                }
    rep.add("f_unitarity", funit_res, kCheckTol);

    double rmod_res = 0.0;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                if (N(a, b, c)) rmod_res = std::max(rmod_res, std::abs(std::abs(R(a, b, c)) - 1.0));
    rep.add("r_unit_modulus", rmod_res, kCheckTol);

    // Ribbon data: theta_unit = 1, |theta| = 1, theta_{dual a} = theta_a.
    double tw_res = std::abs(twist[unit] - 1.0);
    for (int a = 0; a < r; ++a) {
        tw_res = std::max(tw_res, std::abs(std::abs(twist[a]) - 1.0));
        tw_res = std::max(tw_res, std::abs(twist[a] - twist[dual[a]]));
    }
    rep.add("ribbon_compatibility", tw_res, kCheckTol);

    // Snake consistency: the two zig-zag coefficients must agree, i.e.
    // conj(F^{x xbar x}_x[1,1]) = F^{xbar x xbar}_xbar[1,1], and |kappa| = 1.
    double snake_res = 0.0;
    for (int x = 0; x < r; ++x) {
        if (x == unit) continue;
        int xb = dual[x];
        cplx f1 = F(x, xb, x, x, unit, unit);
        cplx f2 = F(xb, x, xb, xb, unit, unit);
        snake_res = std::max(snake_res, std::abs(std::conj(f1) - f2));
        snake_res = std::max(snake_res, std::abs(std::abs(kappa[x]) - 1.0));
    }
    rep.add("snake_consistency", snake_res, kCheckTol);

    return rep;
}

// ---------------------------------------------------------------------------
// loading

static void finalize(FusionData& fd, const std::optional<std::map<int, double>>& given_qdim,
                     const std::optional<std::map<int, cplx>>& given_twist) {
    const int r = fd.rank();
    if (static_cast<int>(fd.dual.size()) != r) throw fusion_error("dual map incomplete");
    std::vector<int> seen(r, 0);
    for (int a = 0; a < r; ++a) {
        if (fd.dual[a] < 0 || fd.dual[a] >= r)
            throw fusion_error("dual of '" + fd.simples[a] + "' is not a simple");
        seen[fd.dual[a]]++;
    }
    for (int a = 0; a < r; ++a)
        if (seen[a] != 1) throw fusion_error("dual map is not a bijection at '" + fd.simples[a] + "'");

    for (int a = 0; a < r; ++a)
        for (int c = 0; c < r; ++c) {
            if (fd.N(a, fd.unit, c) != (a == c ? 1 : 0))
                throw fusion_error("fusion tensor not unit-compatible at '" + fd.simples[a] + "'");
            if (fd.N(fd.unit, a, c) != (a == c ? 1 : 0))
                throw fusion_error("fusion tensor not unit-compatible at '" + fd.simples[a] + "'");
        }

    fd.qdim = derive_qdims(fd);
    if (given_qdim) {
        for (auto& [i, v] : *given_qdim)
            if (std::abs(v - fd.qdim[i]) > 1e-6)
                throw fusion_error("declared qdim of '" + fd.simples[i] +
                                   "' disagrees with the derived value");
    }
    if (fd.multiplicity_free() && !fd.r_symbols.empty()) {
        fd.twist = derive_twists(fd);
    } else {
        fd.twist.assign(r, 1.0);
    }
    if (given_twist) {
        for (auto& [i, v] : *given_twist)
            if (std::abs(v - fd.twist[i]) > 1e-6)
                throw fusion_error("declared twist of '" + fd.simples[i] +
                                   "' disagrees with the derived value");
    }
    fd.kappa = derive_kappas(fd);

    // FNV-1a over a canonical serialization.
    std::ostringstream canon;
    canon.precision(12);
    for (auto& s : fd.simples) canon << s << ';';
    canon << fd.unit << '|';
    for (int d : fd.dual) canon << d << ',';
    for (long n : fd.fusion_tensor) canon << n << ',';
    for (auto& [k, v] : fd.f_symbols) canon << k << ':' << v.real() << ':' << v.imag() << ',';
    for (auto& [k, v] : fd.r_symbols) canon << k << ':' << v.real() << ':' << v.imag() << ',';
    uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : canon.str()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream hex;
    hex << std::hex << h;
    fd.content_hash = hex.str();
}

static FusionData load_from_json(const json& j) {
    if (j.contains("group")) {
        std::vector<long> orders = j.at("group").get<std::vector<long>>();
        std::vector<std::vector<double>> q;
        for (const auto& row : j.at("bichar")) {
            std::vector<double> qr;
            for (const auto& entry : row) {
                if (entry.is_string()) {
                    const std::string s = entry.get<std::string>();
                    auto slash = s.find('/');
                    if (slash == std::string::npos)
                        qr.push_back(std::stod(s));
                    else
                        qr.push_back(std::stod(s.substr(0, slash)) /
                                     std::stod(s.substr(slash + 1)));
                } else {
                    qr.push_back(entry.get<double>());
                }
            }
            q.push_back(qr);
        }
        return pointed_category(orders, q);
    }

    FusionData fd;
    fd.simples = j.at("simples").get<std::vector<std::string>>();
    if (fd.simples.empty()) throw fusion_error("no simples");
    fd.unit = fd.index_of(j.at("unit").get<std::string>());

    const int r = fd.rank();
    fd.dual.assign(r, -1);
    for (auto& [from, to] : j.at("dual").items()) fd.dual[fd.index_of(from)] = fd.index_of(to.get<std::string>());

    fd.fusion_tensor.assign(static_cast<size_t>(r) * r * r, 0);
    for (const auto& row : j.at("fusion")) {
        int a = fd.index_of(row.at(0).get<std::string>());
        int b = fd.index_of(row.at(1).get<std::string>());
        int c = fd.index_of(row.at(2).get<std::string>());
        fd.fusion_tensor[(static_cast<size_t>(a) * r + b) * r + c] = row.at(3).get<long>();
    }
    // Unit rows may be omitted from documents; fill them in when absent.
    for (int a = 0; a < r; ++a) {
        bool row_empty = true, col_empty = true;
        for (int c = 0; c < r; ++c) {
            if (fd.fusion_tensor[(static_cast<size_t>(a) * r + fd.unit) * r + c]) row_empty = false;
            if (fd.fusion_tensor[(static_cast<size_t>(fd.unit) * r + a) * r + c]) col_empty = false;
        }
        if (row_empty) fd.fusion_tensor[(static_cast<size_t>(a) * r + fd.unit) * r + a] = 1;
        if (col_empty) fd.fusion_tensor[(static_cast<size_t>(fd.unit) * r + a) * r + a] = 1;
    }

    if (j.contains("F"))
        for (const auto& row : j.at("F")) {
            int a = fd.index_of(row.at(0).get<std::string>());
            int b = fd.index_of(row.at(1).get<std::string>());
            int c = fd.index_of(row.at(2).get<std::string>());
            int d = fd.index_of(row.at(3).get<std::string>());
            int e = fd.index_of(row.at(4).get<std::string>());
            int f = fd.index_of(row.at(5).get<std::string>());
            fd.f_symbols[detail::fkey(a, b, c, d, e, f)] =
                cplx(row.at(6).get<double>(), row.at(7).get<double>());
        }
    if (j.contains("R"))
        for (const auto& row : j.at("R")) {
            int a = fd.index_of(row.at(0).get<std::string>());
            int b = fd.index_of(row.at(1).get<std::string>());
            int c = fd.index_of(row.at(2).get<std::string>());
            fd.r_symbols[detail::rkey(a, b, c)] =
                cplx(row.at(3).get<double>(), row.at(4).get<double>());
        }

    std::optional<std::map<int, double>> gq;
    if (j.contains("qdim")) {
        gq.emplace();
        for (auto& [k, v] : j.at("qdim").items()) (*gq)[fd.index_of(k)] = v.get<double>();
    }
    std::optional<std::map<int, cplx>> gt;
    if (j.contains("twist")) {
        gt.emplace();
        for (auto& [k, v] : j.at("twist").items()) {
            if (v.is_array())
                (*gt)[fd.index_of(k)] = cplx(v.at(0).get<double>(), v.at(1).get<double>());
            else
                (*gt)[fd.index_of(k)] = cplx(v.get<double>(), 0.0);
        }
    }

    finalize(fd, gq, gt);
    return fd;
}

FusionData load_category(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw fusion_error(std::string("category document is not valid JSON: ") + e.what());
    }
    try {
        return load_from_json(j);
    } catch (const json::exception& e) {
        throw fusion_error(std::string("category document schema violation: ") + e.what());
    }
}

FusionData load_category_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw fusion_error("cannot open category file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_category(ss.str());
}

// ---------------------------------------------------------------------------
// pointed categories

FusionData pointed_category(const std::vector<long>& orders,
                            const std::vector<std::vector<double>>& bichar) {
    const size_t m = orders.size();
    if (bichar.size() != m) throw fusion_error("bicharacter matrix has wrong number of rows");
    for (auto& row : bichar)
        if (row.size() != m) throw fusion_error("bicharacter matrix has wrong number of columns");
    for (size_t jx = 0; jx < m; ++jx)
        for (size_t kx = 0; kx < m; ++kx) {
            double a = bichar[jx][kx] * orders[jx];
            double b = bichar[jx][kx] * orders[kx];
            if (std::abs(a - std::round(a)) > 1e-9 || std::abs(b - std::round(b)) > 1e-9)
                throw fusion_error("bicharacter q_jk must be a multiple of 1/gcd of the orders");
        }

    long size = 1;
    for (long n : orders) {
        if (n < 1) throw fusion_error("cyclic order must be positive");
        size *= n;
    }

    auto element = [&](long idx) {
        std::vector<long> g(m);
        for (size_t jx = 0; jx < m; ++jx) {
            g[jx] = idx % orders[jx];
            idx /= orders[jx];
        }
        return g;
    };
    auto index_of_elem = [&](const std::vector<long>& g) {
        long idx = 0;
        for (size_t jx = m; jx-- > 0;) idx = idx * orders[jx] + ((g[jx] % orders[jx]) + orders[jx]) % orders[jx];
        return idx;
    };

    FusionData fd;
    fd.simples.resize(size);
    for (long i = 0; i < size; ++i) {
        auto g = element(i);
        std::string lab = "g";
        for (size_t jx = 0; jx < m; ++jx) lab += (jx ? "." : "") + std::to_string(g[jx]);
        fd.simples[i] = (size == 1) ? "1" : lab;
    }
    fd.unit = 0;
    fd.dual.resize(size);
    fd.fusion_tensor.assign(static_cast<size_t>(size) * size * size, 0);
    const int r = static_cast<int>(size);
    for (long i = 0; i < size; ++i) {
        auto gi = element(i);
        std::vector<long> ginv(m);
        for (size_t jx = 0; jx < m; ++jx) ginv[jx] = (orders[jx] - gi[jx]) % orders[jx];
        fd.dual[i] = static_cast<int>(index_of_elem(ginv));
        for (long jdx = 0; jdx < size; ++jdx) {
            auto gj = element(jdx);
            std::vector<long> gk(m);
            for (size_t jx = 0; jx < m; ++jx) gk[jx] = (gi[jx] + gj[jx]) % orders[jx];
            fd.fusion_tensor[(static_cast<size_t>(i) * r + jdx) * r + index_of_elem(gk)] = 1;
        }
    }

    auto chi = [&](long i, long jdx) {
        auto gi = element(i), gj = element(jdx);
        double phase = 0.0;
        for (size_t a = 0; a < m; ++a)
            for (size_t b = 0; b < m; ++b) phase += bichar[a][b] * gi[a] * gj[b];
        return std::polar(1.0, 2.0 * std::numbers::pi * phase);
    };

    for (long i = 0; i < size; ++i)
        for (long jdx = 0; jdx < size; ++jdx) {
            auto gi = element(i), gj = element(jdx);
            std::vector<long> gk(m);
            for (size_t jx = 0; jx < m; ++jx) gk[jx] = (gi[jx] + gj[jx]) % orders[jx];
            long kdx = index_of_elem(gk);
            if (i != fd.unit && jdx != fd.unit)
                fd.r_symbols[detail::rkey(static_cast<int>(i), static_cast<int>(jdx),
                                          static_cast<int>(kdx))] = chi(i, jdx);
            // All F-matrices of a pointed category with a bicharacter braiding
            // are trivial in this gauge.
            for (long l = 0; l < size; ++l) {
                auto gl = element(l);
                std::vector<long> gil(m), gjl(m), gijl(m);
                for (size_t jx = 0; jx < m; ++jx) {
                    gil[jx] = (gi[jx] + gj[jx]) % orders[jx];
                    gjl[jx] = (gj[jx] + gl[jx]) % orders[jx];
                    gijl[jx] = (gi[jx] + gj[jx] + gl[jx]) % orders[jx];
                }
                if (i == fd.unit || jdx == fd.unit || l == fd.unit) continue;
                fd.f_symbols[detail::fkey(static_cast<int>(i), static_cast<int>(jdx),
                                          static_cast<int>(l), static_cast<int>(index_of_elem(gijl)),
                                          static_cast<int>(index_of_elem(gil)),
                                          static_cast<int>(index_of_elem(gjl)))] = 1.0;
            }
        }

    finalize(fd, std::nullopt, std::nullopt);
    return fd;
}

// ---------------------------------------------------------------------------
// builtins

static FusionData make_trivial() {
    json j = {{"simples", {"1"}}, {"unit", "1"}, {"dual", {{"1", "1"}}},
              {"fusion", {{"1", "1", "1", 1}}}};
    return load_from_json(j);
}

static FusionData make_fib() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double ip = 1.0 / phi, sp = 1.0 / std::sqrt(phi);
    json j;
    j["simples"] = {"1", "tau"};
    j["unit"] = "1";
    j["dual"] = {{"1", "1"}, {"tau", "tau"}};
    j["fusion"] = json::array({json::array({"tau", "tau", "1", 1}),
                               json::array({"tau", "tau", "tau", 1})});
    j["F"] = json::array({
        json::array({"tau", "tau", "tau", "1", "tau", "tau", 1.0, 0.0}),
        json::array({"tau", "tau", "tau", "tau", "1", "1", ip, 0.0}),
        json::array({"tau", "tau", "tau", "tau", "1", "tau", sp, 0.0}),
        json::array({"tau", "tau", "tau", "tau", "tau", "1", sp, 0.0}),
        json::array({"tau", "tau", "tau", "tau", "tau", "tau", -ip, 0.0}),
    });
    const cplx r1 = std::polar(1.0, -4.0 * std::numbers::pi / 5.0);
    const cplx rt = std::polar(1.0, 3.0 * std::numbers::pi / 5.0);
    j["R"] = json::array({
        json::array({"tau", "tau", "1", r1.real(), r1.imag()}),
        json::array({"tau", "tau", "tau", rt.real(), rt.imag()}),
    });
    return load_from_json(j);
}

static FusionData make_ising() {
    const double s = 1.0 / std::sqrt(2.0);
    json j;
    j["simples"] = {"1", "psi", "sigma"};
    j["unit"] = "1";
    j["dual"] = {{"1", "1"}, {"psi", "psi"}, {"sigma", "sigma"}};
    j["fusion"] = json::array({
        json::array({"psi", "psi", "1", 1}),
        json::array({"psi", "sigma", "sigma", 1}),
        json::array({"sigma", "psi", "sigma", 1}),
        json::array({"sigma", "sigma", "1", 1}),
        json::array({"sigma", "sigma", "psi", 1}),
    });
    json F = json::array();
    // sigma sigma sigma -> sigma: Hadamard block over {1, psi}.
    F.push_back(json::array({"sigma", "sigma", "sigma", "sigma", "1", "1", s, 0.0}));
    F.push_back(json::array({"sigma", "sigma", "sigma", "sigma", "1", "psi", s, 0.0}));
    F.push_back(json::array({"sigma", "sigma", "sigma", "sigma", "psi", "1", s, 0.0}));
    F.push_back(json::array({"sigma", "sigma", "sigma", "sigma", "psi", "psi", -s, 0.0}));
    // The two famous minus signs.
    F.push_back(json::array({"psi", "sigma", "psi", "sigma", "sigma", "sigma", -1.0, 0.0}));
    F.push_back(json::array({"sigma", "psi", "sigma", "psi", "sigma", "sigma", -1.0, 0.0}));
    // Remaining admissible non-trivial-label entries are +1.
    F.push_back(json::array({"psi", "psi", "psi", "psi", "1", "1", 1.0, 0.0}));
    F.push_back(json::array({"psi", "psi", "sigma", "sigma", "1", "sigma", 1.0, 0.0}));
    F.push_back(json::array({"sigma", "psi", "psi", "sigma", "sigma", "1", 1.0, 0.0}));
    F.push_back(json::array({"psi", "sigma", "sigma", "psi", "sigma", "1", 1.0, 0.0}));
    F.push_back(json::array({"psi", "sigma", "sigma", "1", "sigma", "psi", 1.0, 0.0}));
    F.push_back(json::array({"sigma", "sigma", "psi", "psi", "1", "sigma", 1.0, 0.0}));
    F.push_back(json::array({"sigma", "psi", "sigma", "1", "sigma", "sigma", 1.0, 0.0}));
    F.push_back(json::array({"sigma", "sigma", "psi", "1", "psi", "sigma", 1.0, 0.0}));
    j["F"] = F;
    const cplx rss1 = std::polar(1.0, -std::numbers::pi / 8.0);
    const cplx rssp = std::polar(1.0, 3.0 * std::numbers::pi / 8.0);
    j["R"] = json::array({
        json::array({"psi", "psi", "1", -1.0, 0.0}),
        json::array({"psi", "sigma", "sigma", 0.0, -1.0}),
        json::array({"sigma", "psi", "sigma", 0.0, -1.0}),
        json::array({"sigma", "sigma", "1", rss1.real(), rss1.imag()}),
        json::array({"sigma", "sigma", "psi", rssp.real(), rssp.imag()}),
    });
    return load_from_json(j);
}

bool is_builtin_name(const std::string& name) {
    return name == "trivial" || name == "fib" || name == "ising" ||
           name.rfind("pointed:", 0) == 0;
}

FusionData builtin_category(const std::string& name) {
    if (name == "trivial") return make_trivial();
    if (name == "fib") return make_fib();
    if (name == "ising") return make_ising();
    if (name.rfind("pointed:", 0) == 0) {
        std::string rest = name.substr(8);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw fusion_error("pointed builtin needs the form pointed:<orders>:<bichar>");
        std::string orders_s = rest.substr(0, colon), bichar_s = rest.substr(colon + 1);
        std::vector<long> orders;
        std::stringstream os(orders_s);
        std::string tok;
        while (std::getline(os, tok, ',')) orders.push_back(std::stol(tok));
        std::vector<std::vector<double>> q;
        std::stringstream rs(bichar_s);
        std::string row;
        while (std::getline(rs, row, ';')) {
            std::vector<double> qr;
            std::stringstream cs(row);
            while (std::getline(cs, tok, ',')) {
                auto slash = tok.find('/');
                if (slash == std::string::npos)
                    qr.push_back(std::stod(tok));
                else
                    qr.push_back(std::stod(tok.substr(0, slash)) / std::stod(tok.substr(slash + 1)));
            }
            q.push_back(qr);
        }
        return pointed_category(orders, q);
    }
    throw fusion_error("unknown builtin category '" + name + "'");
}

}  // namespace surfhom
