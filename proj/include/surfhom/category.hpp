#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "surfhom/linalg.hpp"

namespace surfhom {

// Objects of a finite semisimple C*-category, kept skeletal: a finitely
// supported multiplicity vector over the simples. The zero object is the
// empty map.
struct Obj {
    std::map<int, long> mult;

    Obj() = default;
    explicit Obj(std::map<int, long> m) : mult(std::move(m)) { prune(); }

    static Obj simple(int index, long m = 1) {
        Obj o;
        if (m > 0) o.mult[index] = m;
        return o;
    }
    static Obj zero() { return Obj{}; }

    long operator()(int index) const {
        auto it = mult.find(index);
        return it == mult.end() ? 0 : it->second;
    }
    long total_dim() const {
        long t = 0;
        for (auto& [i, m] : mult) t += m;
        return t;
    }
    bool is_zero() const { return mult.empty(); }
    bool operator==(const Obj& o) const { return mult == o.mult; }

    void prune() {
        for (auto it = mult.begin(); it != mult.end();) {
            if (it->second <= 0)
                it = mult.erase(it);
            else
                ++it;
        }
    }
};

Obj operator+(const Obj& a, const Obj& b);

// Morphisms are per-simple complex blocks, target.mult(i) x source.mult(i).
// Blocks exist exactly for simples supported in both source and target.
struct Mor {
    Obj source;
    Obj target;
    std::map<int, Mat> blocks;

    Mor() = default;
    Mor(Obj src, Obj tgt);

    static Mor identity(const Obj& x);
    static Mor zero(const Obj& src, const Obj& tgt) { return Mor(src, tgt); }

    Mat& block(int i) { return blocks.at(i); }
    const Mat& block(int i) const { return blocks.at(i); }
    bool has_block(int i) const { return blocks.count(i) != 0; }
};

struct composition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Blockwise matrix product f o g (first g, then f).
Mor compose(const Mor& f, const Mor& g);

// Conjugate-transpose blocks, source and target swapped.
Mor dagger(const Mor& f);

// Max over simples of the operator norm of each block.
double norm(const Mor& f);

Mor operator+(const Mor& f, const Mor& g);
Mor operator-(const Mor& f, const Mor& g);
Mor operator*(const cplx& s, const Mor& f);

// Cokernel of (f - g) together with the coisometric projection q onto it:
// q o f = q o g and q o q^dagger = id.  The cokernel basis is taken from the
// left singular vectors of (f - g) with singular value below
// 1e-9 * max(largest singular value, 1).
std::pair<Obj, Mor> coequalizer(const Mor& f, const Mor& g);

struct DirectSum {
    Obj sum;
    Mor inj1, inj2;    // isometries x -> sum, y -> sum
    Mor proj1, proj2;  // adjoints
};

// Multiplicities add; injections are isometries with orthogonal ranges
// summing to the identity on the sum.
DirectSum direct_sum(const Obj& x, const Obj& y);

}  // namespace surfhom
