// One PASS/FAIL line per acceptance criterion.  Criteria listed in kKnownFailures
// are reproduced faithfully and fail for documented reasons; the exit status counts
// only unexpected outcomes (a new failure, or a known failure that starts passing).

#include "hc/group_law.hpp"
#include "hc/honeycomb.hpp"
#include "hc/symmetrize.hpp"

#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace hc;

namespace {

const std::set<int> kKnownFailures = {6, 8};
int unexpected = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail)
{
    std::printf("%s %d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
    const bool known = kKnownFailures.count(id) > 0;
    if (ok == known) {
        ++unexpected;
        std::printf("  (unexpected: criterion %d is %s)\n", id, known ? "listed as a known failure" : "expected to pass");
    }
    std::fflush(stdout);
}

template <class F>
void run(int id, const std::string& name, F&& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail += std::string(" exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, " [%.1fs]", s);
    report(id, name, ok, detail + buf);
}

Series S(const char* s) { return parse_series(s); }

Rat rand_rat(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    long n = 0;
    while (n == 0) n = num(rng);
    return make_rat(n, den(rng));
}

// ---- polynomial helpers for oracles ---------------------------------------

using Vec = std::vector<Rat>;

Vec vmul(const Vec& a, const Vec& b, std::size_t len)
{
    Vec r(len, Rat(0));
    for (std::size_t i = 0; i < a.size() && i < len; ++i)
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) r[i + j] += a[i] * b[j];
    return r;
}

SeriesPoly pmul(const SeriesPoly& a, const SeriesPoly& b)
{
    SeriesPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Series());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

SeriesPoly ppow(const SeriesPoly& a, int k)
{
    SeriesPoly r({Series(1)});
    for (int i = 0; i < k; ++i) r = pmul(r, a);
    return r;
}

// numerator³ − ι·denominator of the a = 0 closed form, written out by hand
SeriesPoly b_equation(const Series& iota)
{
    SeriesPoly num = ppow(SeriesPoly({Series(1), Series(0), Series(-24), Series(48)}), 3);
    SeriesPoly den = pmul(pmul(ppow(SeriesPoly({Series(0), Series(1)}), 6), ppow(SeriesPoly({Series(-1), Series(2)}), 3)),
                          pmul(ppow(SeriesPoly({Series(-1), Series(3)}), 2), SeriesPoly({Series(1), Series(6)})));
    SeriesPoly r = num;
    r.c.resize(13);
    for (std::size_t i = 0; i < den.c.size(); ++i) r.c[i] -= iota * den.c[i];
    return r;
}

Rat j_a0(const Rat& b)
{
    Rat n = 48 * b * b * b - 24 * b * b + 1;
    Rat d = b * b * b * b * b * b * (2 * b - 1) * (2 * b - 1) * (2 * b - 1) * (3 * b - 1) * (3 * b - 1) * (6 * b + 1);
    return n * n * n / d;
}

Rat j_ab(const Rat& a, const Rat& b)
{
    Rat u = 6 * a - 1;
    Rat v = 72 * a * b * b - 48 * b * b * b - 36 * a * a + 24 * b * b - 6 * a - 1;
    Rat w = 9 * a * a * a - 3 * a * b * b + 2 * b * b * b - 3 * a * a - b * b + a;
    Rat p = 3 * a - 3 * b + 1;
    return u * u * u * v * v * v / ((3 * a + 6 * b + 1) * p * p * w * w * w);
}

long sigma(long n, int k)
{
    long s = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) {
            long p = 1;
            for (int i = 0; i < k; ++i) p *= d;
            s += p;
        }
    return s;
}

// q·j(q) = E4³/∏(1 − qⁿ)²⁴
Vec qj_oracle(std::size_t len)
{
    Vec e4(len, Rat(0)), pr(len, Rat(0));
    e4[0] = 1;
    for (std::size_t n = 1; n < len; ++n) e4[n] = 240 * sigma(long(n), 3);
    Vec num = vmul(vmul(e4, e4, len), e4, len);
    pr[0] = 1;
    for (std::size_t n = 1; n < len; ++n) {
        Vec f(len, Rat(0));
        f[0] = 1;
        f[n] = -1;
        for (int k = 0; k < 24; ++k) pr = vmul(pr, f, len);
    }
    Vec out(len, Rat(0));
    for (std::size_t i = 0; i < len; ++i) {
        Rat s = num[i];
        for (std::size_t j = 1; j <= i; ++j) s -= pr[j] * out[i - j];
        out[i] = s;
    }
    return out;
}

Series rand_unit(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> n(-7, 7), d(1, 4), e(1, 6);
    long a = 0;
    while (a == 0) a = n(rng);
    return Series(make_rat(a, d(rng))) + Series(make_rat(n(rng), d(rng))) * Series::t_pow(make_rat(e(rng), 2));
}

// ---- criteria --------------------------------------------------------------

bool c1(std::string& d)
{
    const Series published = S("t + t^2 - 5*t^3 - 7*t^4 + 30*t^5 + 43*t^6 - 60*t^7 - 15*t^8 - 731*t^9 - 1858*t^10 + 11676*t^11 + 22091*t^12 - "
                               "30612*t^13 + O(t^14)");
    // classical sign: the rational branch
    const auto neg = puiseux_roots(b_equation(S("-t^(-6)")), 14);
    bool rational = false;
    for (const auto& x : neg.roots)
        if (x.val() == 1 && x.lead() == Cyclo(1)) rational = x == published;
    // ι = t^(-6) as printed: principal branch is the series at ζ12·t
    const auto pos = puiseux_roots(b_equation(S("t^(-6)")), 14);
    const Series principal = published.scale_variable(Cyclo::zeta12(1));
    bool found = false;
    int branches = 0;
    for (const auto& x : pos.roots) {
        found = found || x == principal;
        for (int k = 1; k < 12; k += 2) branches += x == published.scale_variable(Cyclo::zeta12(k));
    }
    d = std::string("rational branch (iota = -t^-6) exact: ") + (rational ? "yes" : "no") + "; principal branch (iota = t^-6) exact: " +
        (found ? "yes" : "no") + "; zeta-branches matched " + std::to_string(branches) + "/6";
    return rational && found && branches == 6;
}

bool c2(std::string& d)
{
    std::mt19937_64 rng(2024);
    int ok = 0, n = 0;
    ok += j_invariant(symmetric_cubic(Series(0), Series(1))) == Series(make_rat(15625, 28));
    ++n;
    for (int k = 0; k < 5;) {
        const Rat b = rand_rat(rng);
        if (b == make_rat(1, 2) || b == make_rat(1, 3) || b == make_rat(-1, 6)) continue;
        ok += j_invariant(symmetric_cubic(Series(0), Series(b))) == Series(j_a0(b));
        ++n;
        ++k;
    }
    for (int k = 0; k < 5;) {
        const Rat a = rand_rat(rng), b = rand_rat(rng);
        if (discriminant(symmetric_cubic(Series(a), Series(b))).is_exact_zero() || a == make_rat(1, 6)) continue;
        ok += j_invariant(symmetric_cubic(Series(a), Series(b))) == Series(j_ab(a, b));
        ++n;
        ++k;
    }
    d = std::to_string(ok) + "/" + std::to_string(n) + " exact matches (b = 1 -> " + j_invariant(symmetric_cubic(Series(0), Series(1))).str() + ")";
    return ok == n;
}

bool c3(std::string& d)
{
    // the twelve lines, as listed
    const std::vector<Triple> expected = {{1, 2, 3}, {1, 4, 7}, {1, 5, 9}, {1, 6, 8}, {2, 4, 9}, {2, 5, 8},
                                          {2, 6, 7}, {3, 4, 8}, {3, 5, 7}, {3, 6, 9}, {4, 5, 6}, {7, 8, 9}};
    std::mt19937_64 rng(3);
    int ok = 0;
    std::ostringstream os;
    for (int k = 0; k < 3; ++k) {
        // ω = c³ so the cube root is known exactly
        Series c = Series(rand_rat(rng));
        if (k == 2) c = c + Series(rand_rat(rng)) * Series::t_pow(1);
        const Series omega = c.pow(3);
        const Series one(1), x1(Cyclo::zeta12(4)), x2(Cyclo::zeta12(8));
        const Series e0 = one + c, e1 = one + x1 * c, e2 = one + x2 * c;
        const std::vector<Point3> A = {{one, -one, Series(0)}, {one, Series(0), -one}, {Series(0), one, -one}, {e0, e1, e2}, {e1, e2, e0},
                                       {e2, e0, e1},           {e1, e0, e2},           {e0, e2, e1},           {e2, e1, e0}};
        std::vector<Triple> zero;
        for (int i = 0; i < 9; ++i)
            for (int j = i + 1; j < 9; ++j)
                for (int l = j + 1; l < 9; ++l) {
                    const Mat3 m = {A[i], A[j], A[l]};
                    if (det3(m).is_exact_zero()) zero.push_back({i + 1, j + 1, l + 1});
                }
        // the library matrix, from ω alone, has the same rows
        const PointList L = inflection_matrix(omega);
        bool same = L.size() == 9;
        for (int i = 0; same && i < 9; ++i)
            for (int j = 0; j < 3; ++j) same = same && (L[i][j] - A[i][j]).is_zero_to_prec();
        ok += zero == expected && same;
        os << (k ? ", " : "") << "omega=" << omega.str() << ": " << zero.size() << " vanishing minors" << (same ? "" : ", library rows differ");
    }
    d = std::to_string(ok) + "/3 match the listed triples (" + os.str() + ")";
    return ok == 3;
}

Mat3 random_rational_unimodular(std::mt19937_64& rng)
{
    Mat3 m = identity3();
    std::uniform_int_distribution<int> idx(0, 2), num(-3, 3), den(1, 3);
    for (int step = 0; step < 6; ++step) {
        const int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        const Series c(make_rat(num(rng), den(rng)));
        for (int k = 0; k < 3; ++k) m[i][k] += c * m[j][k];
    }
    std::swap(m[0], m[idx(rng)]);
    return m;
}

bool c4(std::string& d)
{
    const Rat prec = 10;
    std::mt19937_64 rng(4);
    int ok = 0;
    long max_tested = 0;
    Rat min_agree;
    for (int trial = 0; trial < 5; ++trial) {
        const Series a = Series(rand_rat(rng)) * Series::t_pow(3);
        const Series b = Series::t_pow(1) + Series(rand_rat(rng)) * Series::t_pow(2);
        const TernaryCubic g = symmetric_cubic(a, b);
        if (honeycomb_ratios(g).cls != HoneycombClass::symmetric_honeycomb) continue;
        const TernaryCubic f = apply_transform(g, random_rational_unimodular(rng));
        const SymmetrizeResult r = symmetrize_pipeline(f, prec);
        const TernaryCubic fm = apply_transform(f, r.m);
        const Series jf = j_invariant(f);
        const Rat agree = *agreement_order(j_invariant(fm), jf) - jf.val();
        max_tested = std::max(max_tested, long(r.transforms_tested));
        if (trial == 0 || agree < min_agree) min_agree = agree;
        ok += honeycomb_ratios(fm).cls == HoneycombClass::symmetric_honeycomb && r.transforms_tested <= 13 && agree >= prec;
    }
    d = std::to_string(ok) + "/5 round trips; max transforms tested " + std::to_string(max_tested) + "; min relative j agreement " + to_string(min_agree);
    return ok == 5;
}

bool c5(std::string& d)
{
    const Vec h = qj_oracle(8);
    const auto rev = q_reversion_coefficients(6);
    // Lagrange: w = q/h(q) gives q = Σ w^k/k · [q^{k−1}] h^k
    Vec hk{Rat(1)};
    int ok = 0;
    for (long k = 1; k <= 6; ++k) {
        hk = vmul(hk, h, 8);
        ok += rev.size() >= std::size_t(k) && rev[k - 1] == hk[k - 1] / k;
    }
    const bool head = rev.size() >= 3 && rev[0] == 1 && rev[1] == 744 && rev[2] == 750420;
    const ModularCheck m = modular_check(Series::t_pow(1), 6);
    const bool modular = m.checked_to >= 6 && m.residual.is_zero_below(Rat(6));
    std::ostringstream os;
    os << ok << "/6 reversion coefficients match the Lagrange oracle; leading 1, 744, 750420: " << (head ? "yes" : "no")
       << "; modular identity residual zero through order " << to_string(m.checked_to);
    d = os.str();
    return ok == 6 && head && modular;
}

bool c6(std::string& d)
{
    std::mt19937_64 rng(6);
    const Series q = Series::t_pow(3);
    int periodic = 0, literal = 0, corrected = 0;
    for (int i = 0; i < 20; ++i) {
        Series x = rand_unit(rng), a = rand_unit(rng);
        if (i % 3 == 1) x = x * Series::t_pow(make_rat(i % 5, 2));
        periodic += (theta_shifted(x * q.inv(), a, q) + (x / a) * theta_shifted(x, a, q)).is_zero_to_prec();
        literal += (x * theta(x.inv(), q) - theta(x, q)).is_zero_to_prec();
        corrected += (theta(x.inv(), q) + x * theta(x, q)).is_zero_to_prec();
    }
    std::ostringstream os;
    os << "quasi-periodicity " << periodic << "/20; literal x*Theta(1/x) = Theta(x) " << literal << "/20; Theta(1/x) = -x*Theta(x) " << corrected
       << "/20";
    d = os.str();
    return periodic == 20 && literal == 20;
}

bool c7(std::string& d)
{
    PrecisionGuard g(12);
    const ThetaParams P = symmetric_example_params(Rat(6), make_rat(1, 2));
    const TropicalCubicCurve a = trop_parametrize(P);
    const TernaryCubic f = implicitize(P);
    const TropicalCubicCurve b = tropicalize_cubic(f);
    if (!a.hexagon || !b.hexagon) {
        d = "missing hexagon";
        return false;
    }
    auto sorted_pts = [](const TropicalCubicCurve& c) {
        std::vector<Pt2> v;
        for (int k = 0; k < 6; ++k) v.push_back(c.vertices[c.hexagon->v[k]]);
        std::sort(v.begin(), v.end());
        return v;
    };
    // segment shared by the two tentacles leaving one hexagon vertex
    auto segs = [](const TropicalCubicCurve& c) {
        std::map<int, std::vector<Rat>> at;
        for (const auto& t : c.tentacles) at[t.hex_index].push_back(t.segment_length);
        std::map<int, Rat> s;
        for (const auto& [k, v] : at)
            if (v.size() == 2 && v[0] == v[1]) s[k] = v[0];
        return s;
    };
    bool ell_one = true;
    for (int k = 0; k < 6; ++k) ell_one = ell_one && a.hexagon->ell[k] == 1 && b.hexagon->ell[k] == 1;
    const std::map<int, Rat> sa = segs(a), sb = segs(b);
    bool half = sa.size() == 3;
    for (const auto& [k, v] : sa) half = half && v == make_rat(1, 2);
    const bool same_hex = sorted_pts(a) == sorted_pts(b);
    const Rat total = b.hexagon_length();
    const Rat vj = j_invariant(f).val();
    std::ostringstream os;
    os << "identical hexagons: " << (same_hex ? "yes" : "no") << "; all ell = 1: " << (ell_one ? "yes" : "no") << "; shared tentacle segments "
       << sa.size() << " per route, identical: " << (sa == sb ? "yes" : "no") << ", all 1/2: " << (half ? "yes" : "no") << "; hexagon length " << to_string(total)
       << ", val q " << to_string(P.q.val()) << ", -val j " << to_string(-vj);
    d = os.str();
    return same_hex && ell_one && sa == sb && half && total == P.q.val() && total == -vj;
}

bool c8(std::string& d)
{
    const ThetaParams P = symmetric_example_params(Rat(6), make_rat(1, 2));
    const TGLComplex C = tgl_build(P);
    const FVector& f = C.f;
    const bool match = f.vertices == 117 && f.bounded_edges == 279 && f.rays == 315 && f.squares == 54 && f.triangles == 108 && f.flaps == 279 &&
                       f.quadrants == 171 && f.polygons == 0;
    d = "computed " + f.str() + " (chi = " + std::to_string(f.euler()) + ", boundary closed: " + (C.boundary_closed() ? "yes" : "no") +
        "); expected 117 279 315 54 108 279 171";
    return match && f.euler() == 0;
}

TropPoint tp(const Rat& h, int id = 0, const Rat& dist = Rat(0))
{
    TropPoint p;
    p.hex = h;
    p.id = id;
    p.dist = dist;
    return p;
}

struct LiftOutcome {
    FiberKind kind = FiberKind::single_point;
    bool ok = false;
    std::string why;
};

// One lift pair drawn from rng; PrecisionError escapes so the caller can redo it with more precision.
std::optional<LiftOutcome> lift_trial(std::mt19937_64& rng, const ThetaParams& P, const TropParametrization& T, const std::map<FiberKind, int>& done, int want)
{
    std::uniform_int_distribution<int> id(1, 9), dd(1, 12), hh(0, 71), mode(0, 2);
    auto random_point = [&](bool hex) {
        if (hex) return tp(make_rat(hh(rng), 12));
        const int i = id(rng);
        return tp(T.r[i - 1], i, make_rat(dd(rng), 4));
    };
    const int m = mode(rng);
    const TropPoint U = random_point(m == 0);
    TropPoint V;
    if (m == 2) {
        // partner at the same distance raises the chance of a shared-node fiber
        const int j = id(rng);
        V = tp(T.r[j - 1], j, U.dist);
    } else {
        V = random_point(m == 0);
    }
    const Series u = random_lift(U, P, T, rng), v = random_lift(V, P, T, rng);
    const Series w = (u * v).inv();
    const TropPoint U2 = retract(u, P, T), V2 = retract(v, P, T);
    const FiberDescription F = fiber(U2, V2, P);
    if (done.at(F.kind) >= want) return std::nullopt;
    LiftOutcome out;
    out.kind = F.kind;
    const TropPoint W = retract(w, P, T);
    out.ok = F.contains(W);
    if (!out.ok) {
        out.why = F.str() + " / retraction outside fiber";
        return out;
    }
    // theta evaluation: the plane points tropicalize where the retractions embed
    out.ok = trop_point(parametrize_point(P, u)) == T.embed(U2) && trop_point(parametrize_point(P, v)) == T.embed(V2) &&
             trop_point(parametrize_point(P, w)) == T.embed(W);
    if (!out.ok) out.why = F.str() + " / theta image off the predicted point";
    return out;
}

bool c9(std::string& d)
{
    const int want = 100;
    const ThetaParams P = [] {
        PrecisionGuard g(16);
        return symmetric_example_params(Rat(6), make_rat(1, 2));
    }();
    const TropParametrization T = trop_parametrization(P);
    const Rat hi_prec = 40;
    const ThetaParams Phi = [&] {
        PrecisionGuard g(hi_prec);
        return symmetric_example_params(Rat(6), make_rat(1, 2));
    }();
    const TropParametrization Thi = trop_parametrization(Phi);

    std::mt19937_64 rng(9);
    std::map<FiberKind, int> done = {{FiberKind::single_point, 0}, {FiberKind::subray, 0}, {FiberKind::segment_and_rays, 0}}, bad = done;
    std::vector<std::string> failures;
    int retried = 0, unresolved = 0;
    long attempts = 0;
    auto full = [&] {
        for (const auto& [k, n] : done)
            if (n < want) return false;
        return true;
    };
    while (!full() && attempts++ < 20000) {
        const std::mt19937_64 snapshot = rng;
        std::optional<LiftOutcome> r;
        try {
            PrecisionGuard g(16);
            r = lift_trial(rng, P, T, done, want);
        } catch (const PrecisionError&) {
            // same draw again with more precision
            ++retried;
            std::mt19937_64 again = snapshot;
            try {
                PrecisionGuard g(hi_prec);
                r = lift_trial(again, Phi, Thi, done, want);
            } catch (const PrecisionError& e) {
                ++unresolved;
                if (failures.size() < 3) failures.push_back(std::string("precision: ") + e.what());
                continue;
            }
        }
        if (!r) continue;
        ++done[r->kind];
        if (!r->ok) {
            ++bad[r->kind];
            if (failures.size() < 3) failures.push_back(to_string(r->kind) + ": " + r->why);
        }
    }
    std::ostringstream os;
    int total_bad = unresolved;
    for (const auto& [k, n] : done) {
        os << to_string(k) << " " << n - bad[k] << "/" << n << "; ";
        total_bad += bad[k];
    }
    os << retried << " draws redone at precision " << to_string(hi_prec) << ", " << unresolved << " unresolved";
    for (const auto& f : failures) os << " | " << f;
    d = os.str();
    return total_bad == 0 && full();
}

// Position predicted from the hexagon edge lengths alone: distance |ℓ_{k+1} − ℓ_k|/3 from
// v_{k+1} on the longer of e_k, e_{k+1}; nullopt when the two lengths agree (the point is on the ray).
std::optional<Pt2> lemma_position(const TropicalCubicCurve& c, int k)
{
    const auto& h = *c.hexagon;
    const Rat l1 = h.ell[k - 1], l2 = h.ell[k];
    if (l1 == l2) return std::nullopt;
    const Pt2 v = c.vertices[h.v[k]];
    const Pt2 far = l1 > l2 ? c.vertices[h.v[k - 1]] : c.vertices[h.v[(k + 1) % 6]];
    const Rat len = std::max(l1, l2), dist = abs(Rat(l2 - l1)) / 3;
    return Pt2{v[0] + dist * (far[0] - v[0]) / len, v[1] + dist * (far[1] - v[1]) / len};
}

bool c10(std::string& d)
{
    PrecisionGuard g(14);
    std::mt19937_64 rng(10);
    int ok = 0, made = 0;
    std::ostringstream os;
    while (made < 3) {
        const ThetaParams P = testing::random_honeycomb_params(rng, true);
        const TropParametrization T = trop_parametrization(P);
        const auto& ell = T.curve.hexagon->ell;
        if (std::set<Rat>(ell.begin(), ell.end()).size() == 1) continue;
        ++made;
        // three predicted positions, one per group
        std::vector<std::optional<Pt2>> pred;
        std::vector<Pt2> anchor;
        for (int k : {1, 3, 5}) {
            pred.push_back(lemma_position(T.curve, k));
            anchor.push_back(T.curve.vertices[T.curve.hexagon->v[k]]);
        }
        std::set<int> groups_hit;
        bool all = true;
        const Rat third = P.q.val() / 3;
        for (long j = 0; j < 3; ++j) {
            std::set<Pt2> image;
            int group = -1;
            for (long i = 0; i < 3; ++i) {
                const Series x = Series::monomial(Cyclo::zeta12(4 * i), third * j);
                const Pt2 p = trop_point(parametrize_point(P, x));
                const Pt2 on_hex = T.embed_hex(retract(x, P, T).hex);
                image.insert(p);
                int hit = -1;
                for (int k = 0; k < 3; ++k)
                    if (pred[k] ? p == *pred[k] : on_hex == anchor[k]) hit = k;
                if (hit < 0 || (group >= 0 && hit != group)) all = false;
                group = hit;
            }
            if (group >= 0) groups_hit.insert(group);
        }
        all = all && groups_hit.size() == 3;
        ok += all;
        os << (made > 1 ? "; " : "") << "ell = (";
        for (int k = 0; k < 6; ++k) os << (k ? "," : "") << to_string(ell[k]);
        os << ") " << (all ? "matched" : "mismatch");
    }
    d = std::to_string(ok) + "/3 honeycombs: " + os.str();
    return ok == 3;
}

} // namespace

int main()
{
    SessionConfig s;
    set_session(s);
    run(1, "Puiseux expansion of b", c1);
    run(2, "j-invariant calibration", c2);
    run(3, "Hesse configuration", c3);
    run(4, "symmetrize round trip", c4);
    run(5, "Tate reversion and modular identity", c5);
    run(6, "theta identities", c6);
    run(7, "two-route tropicalization", c7);
    run(8, "tropical group law f-vector", c8);
    run(9, "fiber containment of lift triples", c9);
    run(10, "inflection retractions", c10);
    std::printf("%d unexpected outcome(s); known failures: 6, 8\n", unexpected);
    return unexpected == 0 ? 0 : 1;
}
