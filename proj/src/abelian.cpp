#include "ssg/abelian.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "ssg/errors.hpp"

namespace ssg::abelian {

using words::LeftWord;
using words::Word;

namespace {

bool integral(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_integer(); });
}

RatVec to_rat(const IntVec& v) {
    RatVec r;
    r.reserve(v.size());
    for (auto x : v) r.push_back(Rat(x));
    return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec add(const RatVec& a, const RatVec& b) {
    RatVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// Max-row-sum norm.
Rat inf_norm(const RatMat& m) {
    Rat best(0);
    for (int i = 0; i < m.rows(); ++i) {
        Rat row(0);
        for (int j = 0; j < m.cols(); ++j) {
            Rat x = m.at(i, j);
            row = row + (x < Rat(0) ? -x : x);
        }
        if (best < row) best = row;
    }
    return best;
}

RatMat inverse(const RatMat& m) {
    int n = m.rows();
    RatMat inv = RatMat::identity(n);
    for (int c = 0; c < n; ++c) {
        RatVec col(n);
        for (int i = 0; i < n; ++i) col[i] = inv.at(i, c);
        col = m.solve(col);
        for (int i = 0; i < n; ++i) inv.at(i, c) = col[i];
    }
    return inv;
}

} // namespace

DigitSystem make_digit_system(std::string name, RatMat A, std::vector<IntVec> digits) {
    int n = A.rows();
    if (n == 0 || A.cols() != n) throw OutOfDomain("matrix must be square and nonempty");
    if (digits.empty()) throw OutOfDomain("digit set must be nonempty");
    for (const auto& r : digits)
        if (static_cast<int>(r.size()) != n)
            throw OutOfDomain("digit dimension does not match the matrix");
    if (std::any_of(digits[0].begin(), digits[0].end(), [](std::int64_t x) { return x != 0; }))
        throw OutOfDomain("the first digit must be the zero vector");

    Rat det = A.det();
    if (det.is_zero()) throw OutOfDomain("matrix is degenerate");

    RatMat inv = inverse(A);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!inv.at(i, j).is_integer())
                throw OutOfDomain("the inverse matrix must be integral");

    Rat idet = Rat(1) / det;
    Rat d(static_cast<std::int64_t>(digits.size()));
    if (idet < Rat(0)) idet = -idet;
    if (idet != d)
        throw OutOfDomain("digit count must equal the index |det A^{-1}| = " + idet.str());

    for (size_t i = 0; i < digits.size(); ++i)
        for (size_t j = i + 1; j < digits.size(); ++j) {
            RatVec diff = sub(to_rat(digits[i]), to_rat(digits[j]));
            if (integral(A.apply(diff)))
                throw OutOfDomain("digits " + std::to_string(i) + " and " +
                                  std::to_string(j) + " lie in the same coset");
        }

    DigitSystem ds;
    ds.name = std::move(name);
    ds.A = std::move(A);
    ds.digits = std::move(digits);
    return ds;
}

bool is_finite_state(const RatMat& A) {
    int n = A.rows();
    if (n == 0 || A.cols() != n) throw OutOfDomain("matrix must be square and nonempty");
    if (A.det().is_zero()) throw OutOfDomain("matrix is degenerate");

    if (n == 1) {
        Rat a = A.at(0, 0);
        if (a < Rat(0)) a = -a;
        return a < Rat(1);
    }
    if (n == 2) {
        // Schur-Cohn for x^2 - (tr)x + det: both roots inside the unit circle
        // iff |det| < 1 and |tr| < 1 + det.
        Rat det = A.at(0, 0) * A.at(1, 1) - A.at(0, 1) * A.at(1, 0);
        Rat tr = A.at(0, 0) + A.at(1, 1);
        Rat adet = det < Rat(0) ? -det : det;
        Rat atr = tr < Rat(0) ? -tr : tr;
        return adet < Rat(1) && atr < Rat(1) + det;
    }

    // Gelfand: rho(A) < 1 iff some power has norm < 1. The divergence bound
    // is on the trace, which is sound against non-normal transients:
    // |tr A^m| <= n rho^m, so |tr A^(2^k)| > n forces rho > 1.
    Rat bound(n);
    RatMat p = A;
    try {
        for (int k = 0; k <= 40; ++k) {
            if (inf_norm(p) < Rat(1)) return true;
            Rat tr(0);
            for (int i = 0; i < n; ++i) tr = tr + p.at(i, i);
            if (tr < Rat(0)) tr = -tr;
            if (bound < tr) return false;
            p = p * p;
        }
    } catch (const OverflowError&) {
        throw Indeterminate("norm iteration exceeded exact arithmetic budget");
    }
    throw Indeterminate("norm iteration reached the cap without a verdict");
}

DigitAutomaton digit_automaton(const DigitSystem& ds, const IntVec& g, size_t cap) {
    int n = ds.dim();
    int d = ds.alphabet();
    if (static_cast<int>(g.size()) != n)
        throw OutOfDomain("vector dimension does not match the system");

    DigitAutomaton out;
    out.cap = cap;

    auto machine = std::make_shared<mealy::Machine>();
    machine->alphabet = d;

    std::map<IntVec, int> index;
    std::vector<IntVec> states;
    auto intern = [&](const IntVec& v) {
        auto it = index.find(v);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(states.size());
        index.emplace(v, id);
        states.push_back(v);
        return id;
    };

    intern(g);
    for (size_t q = 0; q < states.size(); ++q) {
        if (states.size() > cap) {
            out.exceeded = true;
            return out;
        }
        IntVec h = states[q];
        std::vector<int> trow(d);
        std::vector<words::Letter> orow(d);
        for (int i = 0; i < d; ++i) {
            int found = -1;
            IntVec next;
            for (int j = 0; j < d; ++j) {
                RatVec v(n);
                for (int t = 0; t < n; ++t)
                    v[t] = Rat(h[t] + ds.digits[i][t] - ds.digits[j][t]);
                RatVec img = ds.A.apply(v);
                if (!integral(img)) continue;
                if (found >= 0)
                    throw Error("digit transition is not unique from state " +
                                std::to_string(q));
                found = j;
                next.clear();
                for (const Rat& x : img) next.push_back(x.num());
            }
            if (found < 0)
                throw Error("no digit transition from state " + std::to_string(q));
            orow[i] = static_cast<words::Letter>(found);
            trow[i] = intern(next);
        }
        machine->trans.push_back(std::move(trow));
        machine->out.push_back(std::move(orow));
    }

    out.machine = {machine, 0};
    out.states = std::move(states);
    return out;
}

RatVec fraction_point(const DigitSystem& ds, const Word& w) {
    int n = ds.dim();
    for (auto x : w)
        if (x < 0 || x >= ds.alphabet()) throw OutOfDomain("letter outside the digit range");
    // Horner from the innermost term: A(r_{w_1} + A(r_{w_2} + ...)).
    RatVec p(n, Rat(0));
    for (size_t k = w.size(); k-- > 0;)
        p = ds.A.apply(add(to_rat(ds.digits[w[k]]), p));
    return p;
}

namespace {

// Rational bound B with every fraction point inside [-B, B]^n, from
// sum_k ||A^k|| ||r||: find m with q = ||A^m|| < 1, then
// B = (sum_{k=1}^m ||A^k||) * max||r|| / (1 - q).
Rat series_bound(const DigitSystem& ds) {
    Rat maxr(0);
    for (const auto& r : ds.digits)
        for (auto x : r) {
            Rat a(x < 0 ? -x : x);
            if (maxr < a) maxr = a;
        }
    if (maxr.is_zero()) return Rat(0);

    RatMat p = ds.A;
    Rat partial(0);
    for (int m = 1; m <= 64; ++m) {
        Rat norm = inf_norm(p);
        partial = partial + norm;
        if (norm < Rat(1))
            return partial * maxr / (Rat(1) - norm);
        p = p * ds.A;
    }
    throw Error("no contracting power within the bound budget");
}

} // namespace

size_t TileRaster::filled() const {
    size_t c = 0;
    for (auto p : pixels)
        if (p) ++c;
    return c;
}

TileRaster render_tile(const DigitSystem& ds, int depth, int resolution) {
    int n = ds.dim();
    int d = ds.alphabet();
    if (n != 1 && n != 2) throw OutOfDomain("rendering supports dimensions 1 and 2");
    if (depth < 0 || resolution < 1) throw OutOfDomain("bad depth or resolution");
    double count = std::pow(static_cast<double>(d), depth);
    if (count > (1 << 22)) throw SizeBoundExceeded("depth too large for the render budget");

    // Box half-width: the series bound doubled, rounded up to a power of two.
    // The margin plus dyadic alignment keeps pixel occupancy stable in depth:
    // deeper point sets only refine inside already-hit pixels (the sets are
    // nested because r_0 = 0), so filled counts saturate instead of drifting.
    Rat bound = series_bound(ds);
    if (bound.is_zero()) bound = Rat(1);
    Rat target = Rat(2) * bound;
    Rat snapped(1);
    while (snapped < target) snapped = snapped * Rat(2);
    while (target <= snapped * Rat(1, 2)) snapped = snapped * Rat(1, 2);
    bound = snapped;

    TileRaster t;
    t.lo.assign(n, -bound);
    t.hi.assign(n, bound);
    t.width = resolution;
    t.height = n == 2 ? resolution : 1;
    t.pixels.assign(static_cast<size_t>(t.width) * t.height, 0);

    // Floating IFS walk over all words of the given depth.
    double lo = -bound.to_double(), span = 2.0 * bound.to_double();
    std::vector<std::vector<double>> digits;
    for (const auto& r : ds.digits) {
        std::vector<double> v;
        for (auto x : r) v.push_back(static_cast<double>(x));
        digits.push_back(v);
    }
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = ds.A.at(i, j).to_double();

    auto plot = [&](const std::vector<double>& p) {
        int px = static_cast<int>((p[0] - lo) / span * t.width);
        px = std::clamp(px, 0, t.width - 1);
        int py = 0;
        if (n == 2) {
            py = static_cast<int>((p[1] - lo) / span * t.height);
            py = std::clamp(py, 0, t.height - 1);
        }
        t.pixels[static_cast<size_t>(py) * t.width + px] = 255;
    };

    // stack of (remaining depth, accumulated point)
    std::vector<std::pair<int, std::vector<double>>> stack;
    stack.push_back({depth, std::vector<double>(n, 0.0)});
    while (!stack.empty()) {
        auto [rem, p] = stack.back();
        stack.pop_back();
        if (rem == 0) {
            plot(p);
            continue;
        }
        for (int x = d - 1; x >= 0; --x) {
            // p -> A(r_x + p), matching the series A r_{w_1} + A^2 r_{w_2} + ...
            std::vector<double> q(n, 0.0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) q[i] += a[i][j] * (digits[x][j] + p[j]);
            stack.push_back({rem - 1, std::move(q)});
        }
    }
    return t;
}

std::string export_pgm(const TileRaster& t) {
    std::ostringstream out;
    out << "P5\n" << t.width << " " << t.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(t.pixels.data()),
              static_cast<std::streamsize>(t.pixels.size()));
    return out.str();
}

Interval fraction_interval(const DigitSystem& ds, int depth) {
    if (ds.dim() != 1) throw OutOfDomain("interval report needs dimension 1");
    double count = std::pow(static_cast<double>(ds.alphabet()), depth);
    if (count > (1 << 22)) throw SizeBoundExceeded("depth too large for the render budget");

    Interval iv{Rat(0), Rat(0)};
    Word w(depth, 0);
    bool first = true;
    while (true) {
        Rat v = fraction_point(ds, w)[0];
        if (first || v < iv.lo) iv.lo = v;
        if (first || iv.hi < v) iv.hi = v;
        first = false;
        int pos = depth - 1;
        while (pos >= 0 && w[pos] == ds.alphabet() - 1) w[pos--] = 0;
        if (pos < 0) break;
        ++w[pos];
    }
    return iv;
}

namespace {

// Exact sum of the fraction series of an eventually periodic left-infinite
// word: the letters right to left are suffix reversed, then the periodic
// tail starting at tail[0].
RatVec series_sum(const DigitSystem& ds, const LeftWord& w) {
    int n = ds.dim();
    size_t p = w.tail.size();
    if (p == 0) throw OutOfDomain("left-infinite word needs a nonempty tail");
    for (auto x : w.tail)
        if (x < 0 || x >= ds.alphabet()) throw OutOfDomain("letter outside the digit range");
    for (auto x : w.suffix)
        if (x < 0 || x >= ds.alphabet()) throw OutOfDomain("letter outside the digit range");

    // T = sum_{j>=1} A^j r_{tail[(j-1) mod p]} via (I - A^p) T = partial sum.
    RatVec partial(n, Rat(0));
    RatMat power = RatMat::identity(n);
    for (size_t j = 0; j < p; ++j) {
        power = power * ds.A;
        partial = add(partial, power.apply(to_rat(ds.digits[w.tail[j]])));
    }
    RatMat lhs = RatMat::identity(n) - power;
    RatVec tail_sum;
    try {
        tail_sum = lhs.solve(std::move(partial));
    } catch (const Error&) {
        throw Error("periodic tail system is singular; the matrix is not contracting");
    }

    // S = sum_{k=1}^{L} A^k r_{suffix[L-k]} + A^L T.
    size_t len = w.suffix.size();
    RatVec s(n, Rat(0));
    power = RatMat::identity(n);
    for (size_t k = 1; k <= len; ++k) {
        power = power * ds.A;
        s = add(s, power.apply(to_rat(ds.digits[w.suffix[len - k]])));
    }
    return add(s, power.apply(tail_sum));
}

} // namespace

bool abelian_asymptotic_eq(const DigitSystem& ds, const LeftWord& w1, const LeftWord& w2) {
    RatVec s1 = series_sum(ds, w1);
    RatVec s2 = series_sum(ds, w2);
    return integral(sub(s1, s2));
}

bool faithful_basis_check(const DigitSystem& ds, int depth, size_t cap) {
    int n = ds.dim();
    for (int i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        auto aut = digit_automaton(ds, e, cap);
        if (aut.exceeded)
            throw SizeBoundExceeded("basis automaton exceeded the state cap");
        // Nontrivial by the given depth: some reachable state within depth-1
        // steps has a non-identity output row.
        const auto& m = aut.machine.m();
        std::vector<int> dist(m.states(), -1);
        std::vector<int> queue{aut.machine.state};
        dist[aut.machine.state] = 0;
        bool nontrivial = false;
        for (size_t qi = 0; qi < queue.size() && !nontrivial; ++qi) {
            int q = queue[qi];
            if (dist[q] >= depth) continue;
            for (int x = 0; x < m.alphabet; ++x) {
                if (m.out[q][x] != x) {
                    nontrivial = true;
                    break;
                }
                int next = m.trans[q][x];
                if (dist[next] < 0) {
                    dist[next] = dist[q] + 1;
                    queue.push_back(next);
                }
            }
        }
        if (!nontrivial) return false;
    }
    return true;
}

} // namespace ssg::abelian
