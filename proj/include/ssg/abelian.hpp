#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssg/mealy.hpp"
#include "ssg/rational.hpp"
#include "ssg/words.hpp"

namespace ssg::abelian {

using IntVec = std::vector<std::int64_t>;

// A numeration system on Z^n: a contracting rational matrix A (the virtual
// endomorphism) and a digit set R = {r_0 = 0, r_1, ..., r_{d-1}} of coset
// representatives of Dom = {v : A v integral}.
struct DigitSystem {
    std::string name;
    RatMat A;
    std::vector<IntVec> digits;

    int dim() const { return A.rows(); }
    int alphabet() const { return static_cast<int>(digits.size()); }

    bool operator==(const DigitSystem& o) const {
        return name == o.name && A == o.A && digits == o.digits;
    }
};

// Validates and builds a digit system: A square and nondegenerate, A^{-1}
// integral with |det A^{-1}| equal to the digit count, r_0 = 0, and the
// digits pairwise in distinct cosets (A(r_i - r_j) nonintegral for i != j).
DigitSystem make_digit_system(std::string name, RatMat A, std::vector<IntVec> digits);

// Whether the Z^n action defined by A is finite-state: spectral radius < 1.
// Exact closed forms decide n <= 2; larger n uses Gelfand iteration on the
// max-row-sum norm of A^(2^k), k <= 40. Throws Indeterminate when neither
// the contraction nor the divergence bound triggers within the cap.
bool is_finite_state(const RatMat& A);

struct DigitAutomaton {
    bool exceeded = false;
    mealy::Initial machine;          // initial state = g
    std::vector<IntVec> states;      // state vectors, aligned with machine states
    size_t cap = 0;
};

// Transducer of adding g in the numeration system: from state h on input
// digit i the output is the unique digit j with h + r_i - r_j in Dom, and the
// next state is A(h + r_i - r_j). States are the vectors reachable from g.
DigitAutomaton digit_automaton(const DigitSystem& ds, const IntVec& g, size_t cap = 65536);

// Exact partial sum sum_{k=1}^{|w|} A^k r_{w_k} of the fraction series.
RatVec fraction_point(const DigitSystem& ds, const words::Word& w);

struct TileRaster {
    std::vector<Rat> lo, hi;         // bounding box, one entry per dimension
    int width = 0, height = 1;       // height 1 for 1-dimensional systems
    std::vector<std::uint8_t> pixels;  // row-major; 0 background, 255 filled

    size_t filled() const;
};

// Plots the depth-level fraction points of all d^depth words into a raster
// over a computed bounding box (geometric norm bound on the series).
// Dimensions 1 and 2 only.
TileRaster render_tile(const DigitSystem& ds, int depth, int resolution);

// Binary PGM (P5) encoding of a raster.
std::string export_pgm(const TileRaster& t);

struct Interval {
    Rat lo, hi;
};

// Exact covered interval of depth-level fraction points, dimension 1 only.
Interval fraction_interval(const DigitSystem& ds, int depth);

// Asymptotic equivalence of two eventually periodic left-infinite words:
// both fraction series are summed exactly (periodic tail by solving
// (I - A^p) t = partial period sum), equivalent iff the difference is in Z^n.
bool abelian_asymptotic_eq(const DigitSystem& ds, const words::LeftWord& w1,
                           const words::LeftWord& w2);

// Necessary finite-depth faithfulness check: every basis vector of Z^n acts
// nontrivially on some word of length <= depth.
bool faithful_basis_check(const DigitSystem& ds, int depth = 10, size_t cap = 65536);

} // namespace ssg::abelian
