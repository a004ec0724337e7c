#include "surfhom/category.hpp"

#include <set>

namespace surfhom {

Obj operator+(const Obj& a, const Obj& b) {
    Obj r = a;
    for (auto& [i, m] : b.mult) r.mult[i] += m;
    r.prune();
    return r;
}

Mor::Mor(Obj src, Obj tgt) : source(std::move(src)), target(std::move(tgt)) {
    for (auto& [i, m] : source.mult) {
        long t = target(i);
        if (t > 0) blocks[i] = Mat::Zero(t, m);
    }
}

Mor Mor::identity(const Obj& x) {
    Mor f(x, x);
    for (auto& [i, b] : f.blocks) b = Mat::Identity(b.rows(), b.cols());
    return f;
}

Mor compose(const Mor& f, const Mor& g) {
    if (!(g.target == f.source)) {
        for (auto& [i, m] : g.target.mult)
            if (f.source(i) != m)
                throw composition_error("composition shape mismatch at simple " + std::to_string(i));
        for (auto& [i, m] : f.source.mult)
            if (g.target(i) != m)
                throw composition_error("composition shape mismatch at simple " + std::to_string(i));
    }
    Mor r(g.source, f.target);
    for (auto& [i, b] : r.blocks) {
        if (f.has_block(i) && g.has_block(i)) b = f.block(i) * g.block(i);
    }
    return r;
}

Mor dagger(const Mor& f) {
    Mor r(f.target, f.source);
    for (auto& [i, b] : r.blocks) {
        if (f.has_block(i)) b = f.block(i).adjoint();
    }
    return r;
}

double norm(const Mor& f) {
    double n = 0.0;
    for (auto& [i, b] : f.blocks) n = std::max(n, spectral_norm(b));
    return n;
}

static void require_parallel(const Mor& f, const Mor& g, const char* what) {
    if (!(f.source == g.source) || !(f.target == g.target))
        throw composition_error(std::string(what) + ": morphisms are not parallel");
}

Mor operator+(const Mor& f, const Mor& g) {
    require_parallel(f, g, "sum");
    Mor r = f;
    for (auto& [i, b] : r.blocks) b += g.block(i);
    return r;
}

Mor operator-(const Mor& f, const Mor& g) {
    require_parallel(f, g, "difference");
    Mor r = f;
    for (auto& [i, b] : r.blocks) b -= g.block(i);
    return r;
}

Mor operator*(const cplx& s, const Mor& f) {
    Mor r = f;
    for (auto& [i, b] : r.blocks) b *= s;
    return r;
}

std::pair<Obj, Mor> coequalizer(const Mor& f, const Mor& g) {
    require_parallel(f, g, "coequalizer");
    Mor d = f - g;

    Obj q_obj;
    std::map<int, Mat> q_blocks;

    // Simples in the target that have no block in d (source misses them)
    // survive untouched.
    std::set<int> seen;
    for (auto& [i, b] : d.blocks) {
        seen.insert(i);
        Eigen::JacobiSVD<Mat> svd(b, Eigen::ComputeFullU);
        const auto& sv = svd.singularValues();
        double cutoff = kEntryTol * std::max(sv.size() > 0 ? sv(0) : 0.0, 1.0);
        long rank = 0;
        for (long k = 0; k < sv.size(); ++k)
            if (sv(k) > cutoff) ++rank;
        long codim = b.rows() - rank;
        if (codim > 0) {
            q_obj.mult[i] = codim;
            // Left singular vectors for the (numerically) zero singular
            // values: rows of q, orthonormal, annihilating im(f - g).
            q_blocks[i] = svd.matrixU().rightCols(codim).adjoint();
        }
    }
    for (auto& [i, m] : d.target.mult) {
        if (!seen.count(i)) q_obj.mult[i] = m;
    }

    Mor q(d.target, q_obj);
    for (auto& [i, b] : q.blocks) {
        auto it = q_blocks.find(i);
        b = (it != q_blocks.end()) ? it->second : Mat::Identity(b.rows(), b.cols());
    }
    return {q_obj, q};
}

DirectSum direct_sum(const Obj& x, const Obj& y) {
    DirectSum r;
    r.sum = x + y;
    r.inj1 = Mor(x, r.sum);
    r.inj2 = Mor(y, r.sum);
    for (auto& [i, b] : r.inj1.blocks) b.topRows(x(i)).setIdentity();
    for (auto& [i, b] : r.inj2.blocks) b.bottomRows(y(i)).setIdentity();
    r.proj1 = dagger(r.inj1);
    r.proj2 = dagger(r.inj2);
    return r;
}

}  // namespace surfhom
