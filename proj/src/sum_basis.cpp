#include "surfhom/sum_basis.hpp"

namespace surfhom {

SumLegBasis sum_basis(const FusionData& fd, const std::vector<Obj>& legs, int root) {
    SumLegBasis b;
    b.fd = &fd;
    b.legs = legs;
    b.root = root;

    const size_t k = legs.size();
    if (k == 0) {
        if (root == fd.unit) {
            SumLegBasis::Elem e;
            b.elems.push_back(e);
            b.index[e] = 0;
        }
        return b;
    }

    std::vector<int> labels(k);
    std::vector<int> path(k);

    auto add_fibers = [&](auto&& self, size_t t, SumLegBasis::Elem& e) -> void {
        if (t == k) {
            b.index[e] = static_cast<long>(b.elems.size());
            b.elems.push_back(e);
            return;
        }
        for (long v = 0; v < b.legs[t](labels[t]); ++v) {
            e.fibers[t] = v;
            self(self, t + 1, e);
        }
    };

    auto rec = [&](auto&& self, size_t depth) -> void {
        if (depth == k) {
            if (path.back() != root) return;
            SumLegBasis::Elem e;
            e.labels = labels;
            e.fibers.assign(k, 0);
            e.path = path;
            add_fibers(add_fibers, 0, e);
            return;
        }
        for (int lab = 0; lab < fd.rank(); ++lab) {
            if (legs[depth](lab) == 0) continue;
            labels[depth] = lab;
            if (depth == 0) {
                path[0] = lab;
                self(self, 1);
            } else {
                for (int m = 0; m < fd.rank(); ++m) {
                    if (fd.N(path[depth - 1], lab, m) >= 1) {
                        path[depth] = m;
                        self(self, depth + 1);
                    }
                }
            }
        }
    };
    rec(rec, 0);

    // The nested label/path recursion above emits fibers innermost, which is
    // already (labels, fibers, path)-lexicographic only when the path is
    // determined by the labels. Re-sort to the documented order.
    std::sort(b.elems.begin(), b.elems.end());
    b.index.clear();
    for (size_t i = 0; i < b.elems.size(); ++i) b.index[b.elems[i]] = static_cast<long>(i);
    return b;
}

std::pair<SumLegBasis, Mat> contract_pair(const SumLegBasis& in, int p, const ChannelMap& channels,
                                          const Obj& out_leg) {
    const FusionData& fd = *in.fd;
    const int q = p - 1;
    if (q < 0 || q + 1 >= static_cast<int>(in.legs.size()))
        throw std::runtime_error("contract_pair: position out of range");

    std::vector<Obj> legs = in.legs;
    legs[q] = out_leg;
    legs.erase(legs.begin() + q + 1);
    SumLegBasis out = sum_basis(fd, legs, in.root);
    Mat M = Mat::Zero(out.dim(), in.dim());

    for (long col = 0; col < in.dim(); ++col) {
        const auto& E = in.elems[col];
        const int i = E.labels[q], j = E.labels[q + 1];
        const long vi = E.fibers[q], vj = E.fibers[q + 1];
        for (const auto& [key, T] : channels) {
            const auto& [ci, cj, ck] = key;
            if (ci != i || cj != j) continue;
            if (out_leg(ck) == 0) continue;

            // Staircase factor collapsing (i, j) -> k inside the global path.
            cplx fcoef;
            std::vector<int> pout;
            if (q == 0) {
                if (E.path[1] != ck) continue;
                fcoef = 1.0;
                pout.assign(E.path.begin() + 1, E.path.end());
            } else {
                int mprev = E.path[q - 1], e = E.path[q], mnext = E.path[q + 1];
                if (fd.N(mprev, ck, mnext) < 1) continue;
                fcoef = fd.F(mprev, i, j, mnext, e, ck);
                pout = E.path;
                pout.erase(pout.begin() + q);
            }
            if (std::abs(fcoef) < 1e-15) continue;

            // Column of T is row-major in (fiber_i, fiber_j).
            const long cols_j = in.legs[q + 1](j);

            for (long u = 0; u < out_leg(ck); ++u) {
                cplx c = T(u, vi * cols_j + vj) * fcoef;
                if (std::abs(c) < 1e-15) continue;
                SumLegBasis::Elem O;
                O.labels = E.labels;
                O.labels[q] = ck;
                O.labels.erase(O.labels.begin() + q + 1);
                O.fibers = E.fibers;
                O.fibers[q] = u;
                O.fibers.erase(O.fibers.begin() + q + 1);
                O.path = pout;
                long row = out.index_of(O);
                if (row >= 0) M(row, col) += c;
            }
        }
    }
    return {out, M};
}

namespace {

// Coefficient of collapsing the leg range [q, q+len) of a global staircase
// path onto the local staircase omega (omega.back() = r), with everything
// else fixed. Product of fuse F-factors; unit-prefix convention makes the
// formula uniform in q.
cplx range_collapse_coeff(const FusionData& fd, const std::vector<int>& labels,
                          const std::vector<int>& gpath, int q, int len,
                          const std::vector<int>& omega) {
    cplx c = 1.0;
    for (int t = 2; t <= len; ++t) {
        int mprev = (q == 0) ? fd.unit : gpath[q - 1];
        int a = omega[t - 2];          // fusion of range legs 0..t-2
        int b = labels[q + t - 1];     // next range leg
        int mnext = gpath[q + t - 1];  // global fusion including it
        int e = gpath[q + t - 2];
        // After earlier collapses the entry below the pair is mprev.
        c *= fd.F(mprev, a, b, mnext, e, omega[t - 1]);
        if (std::abs(c) < 1e-15) return 0.0;
    }
    return c;
}

}  // namespace

std::pair<SumLegBasis, Mat> apply_family(const SumLegBasis& in, int p, const Family& fam) {
    const FusionData& fd = *in.fd;
    const int q = p - 1;
    const int slen = static_cast<int>(fam.src_legs.size());
    const int dlen = static_cast<int>(fam.dst_legs.size());
    if (slen < 1) throw std::runtime_error("apply_family: empty source range");
    if (q < 0 || q + slen > static_cast<int>(in.legs.size()))
        throw std::runtime_error("apply_family: range out of bounds");
    for (int t = 0; t < slen; ++t)
        if (!(in.legs[q + t] == fam.src_legs[t]))
            throw std::runtime_error("apply_family: source legs do not match");

    std::vector<Obj> legs(in.legs.begin(), in.legs.begin() + q);
    for (auto& l : fam.dst_legs) legs.push_back(l);
    for (size_t t = q + slen; t < in.legs.size(); ++t) legs.push_back(in.legs[t]);
    SumLegBasis out = sum_basis(fd, legs, in.root);
    Mat M = Mat::Zero(out.dim(), in.dim());

    // Local bases per root r, for source and destination legs.
    std::map<int, SumLegBasis> src_local, dst_local;
    for (auto& [r, blk] : fam.blocks) {
        src_local.emplace(r, sum_basis(fd, fam.src_legs, r));
        dst_local.emplace(r, sum_basis(fd, fam.dst_legs, r));
    }

    for (long col = 0; col < in.dim(); ++col) {
        const auto& E = in.elems[col];
        int m_before = (q == 0) ? fd.unit : E.path[q - 1];
        int m_after = (slen > 0) ? E.path[q + slen - 1] : m_before;

        for (auto& [r, blk] : fam.blocks) {
            if (fd.N(m_before, r, m_after) < 1) continue;
            const SumLegBasis& sl = src_local.at(r);
            const SumLegBasis& dl = dst_local.at(r);
            if (sl.dim() == 0 || dl.dim() == 0) continue;

            // Local source element matching E's range data.
            SumLegBasis::Elem L;
            L.labels.assign(E.labels.begin() + q, E.labels.begin() + q + slen);
            L.fibers.assign(E.fibers.begin() + q, E.fibers.begin() + q + slen);
            // Enumerate the local paths compatible with these labels.
            for (long li = 0; li < sl.dim(); ++li) {
                const auto& Ls = sl.elems[li];
                if (Ls.labels != L.labels || Ls.fibers != L.fibers) continue;
                cplx cin = range_collapse_coeff(fd, E.labels, E.path, q, slen, Ls.path);
                if (std::abs(cin) < 1e-15) continue;

                for (long dj = 0; dj < dl.dim(); ++dj) {
                    cplx w = blk(dj, li) * cin;
                    if (std::abs(w) < 1e-15) continue;
                    const auto& Ld = dl.elems[dj];

                    // Rebuild global out-elements around the new range.
                    // Outer path entries: prefix unchanged; inside the range
                    // the staircase runs through the new local path, fused
                    // onto m_before; suffix unchanged.
                    SumLegBasis::Elem O;
                    O.labels.reserve(out.legs.size());
                    O.fibers.reserve(out.legs.size());
                    O.labels.assign(E.labels.begin(), E.labels.begin() + q);
                    O.fibers.assign(E.fibers.begin(), E.fibers.begin() + q);
                    for (int t = 0; t < dlen; ++t) {
                        O.labels.push_back(Ld.labels[t]);
                        O.fibers.push_back(Ld.fibers[t]);
                    }
                    O.labels.insert(O.labels.end(), E.labels.begin() + q + slen, E.labels.end());
                    O.fibers.insert(O.fibers.end(), E.fibers.begin() + q + slen, E.fibers.end());

                    // Enumerate admissible global paths through the new range
                    // and weight with the conjugate collapse coefficient.
                    std::vector<int> gpath(out.legs.size());
                    for (int t = 0; t < q; ++t) gpath[t] = E.path[t];
                    auto emit = [&](auto&& self, int t) -> void {
                        if (t == q + dlen) {
                            for (size_t s = q + slen; s < E.path.size(); ++s)
                                gpath[dlen - slen + s] = E.path[s];
                            cplx cout =
                                range_collapse_coeff(fd, O.labels, gpath, q, dlen, Ld.path);
                            if (std::abs(cout) < 1e-15) return;
                            SumLegBasis::Elem OO = O;
                            OO.path = gpath;
                            long row = out.index_of(OO);
                            if (row >= 0) M(row, col) += w * std::conj(cout);
                            return;
                        }
                        if (t == 0) {
                            gpath[0] = O.labels[0];
                            if (dlen >= 1 && 0 == q + dlen - 1 && gpath[0] != m_after) return;
                            self(self, 1);
                            return;
                        }
                        for (int m = 0; m < fd.rank(); ++m) {
                            if (fd.N(gpath[t - 1], O.labels[t], m) < 1) continue;
                            if (t == q + dlen - 1 && m != m_after) continue;
                            gpath[t] = m;
                            self(self, t + 1);
                        }
                    };
                    if (dlen == 0) {
                        if (m_before == m_after) {
                            for (size_t s = q + slen; s < E.path.size(); ++s)
                                gpath[s - slen] = E.path[s];
                            SumLegBasis::Elem OO = O;
                            OO.path = gpath;
                            long row = out.index_of(OO);
                            if (row >= 0) M(row, col) += w;
                        }
                    } else {
                        emit(emit, q);
                    }
                }
            }
        }
    }
    return {out, M};
}

Family family_of_contraction(const FusionData& fd, const Obj& leg_a, const Obj& leg_b,
                             const Obj& leg_out, const ChannelMap& channels) {
    Family fam;
    fam.src_legs = {leg_a, leg_b};
    fam.dst_legs = {leg_out};
    for (int r = 0; r < fd.rank(); ++r) {
        SumLegBasis src = sum_basis(fd, fam.src_legs, r);
        if (src.dim() == 0) continue;
        auto [dst, M] = contract_pair(src, 1, channels, leg_out);
        fam.blocks[r] = M;
    }
    return fam;
}

}  // namespace surfhom
