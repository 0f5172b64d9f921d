#pragma once

#include <optional>
#include <vector>

#include "heightlab/errors.hpp"
#include "heightlab/int_poly.hpp"
#include "heightlab/perm.hpp"

namespace heightlab {

// One certified root disk. Centers are dyadic (doubles), so exact rational
// arithmetic can re-verify every claim; radius is an upper bound proved by
// the Weierstrass inclusion argument at those exact centers.
struct RootDisk {
    double re = 0.0;
    double im = 0.0;
    double radius = 0.0;
    int partner = -1;  // index of the complex-conjugate root; self for real roots
};

// Certified approximations of all roots of a squarefree polynomial:
// one disk per root, pairwise disjoint, each provably containing exactly
// one root, conjugate pairs exactly mirrored.
struct RootBag {
    IntPoly poly;
    long precision_bits = 0;
    std::vector<RootDisk> roots;
};

struct RootOptions {
    double target_radius = 1e-12;
    long prec_start = 128;
    long prec_cap = 4096;
};

RootBag isolate_roots(const IntPoly& f, const RootOptions& opt = {});

// Count of disks certified to contain a real root (partner == self).
int real_root_count_numeric(const RootBag& bag);

// Involution sending each root index to the index of its complex conjugate;
// fixed points are exactly the real roots.
Perm conjugation_pairing(const RootBag& bag);

struct CircleVerdict {
    enum class Method { ExactSelfInversive, CertifiedNumeric };
    bool on_circle = false;
    Method method = Method::ExactSelfInversive;
    struct Witness {
        int root_index;
        Rat separation;  // certified rational gap between the disk and the unit circle
    };
    std::optional<Witness> witness;
};

// Exact decision whether all roots lie on the unit circle: self-inversive
// necessary condition, then the z + 1/z |-> y transform and a Sturm count
// on [-2, 2]. Requires f(0) != 0.
CircleVerdict all_on_unit_circle(const IntPoly& f, const RootOptions& opt = {});

// The degree-floor(d/2) integer polynomial tracking y = z + 1/z for a
// palindromic f of even degree; exposed for cross-checks.
IntPoly inverse_pair_transform(const IntPoly& f);

}  // namespace heightlab
