#include "shylab/khalimsky.hpp"

#include <algorithm>
#include <chrono>

#include "shylab/errors.hpp"

namespace shylab {

namespace {

double elapsed_since(std::chrono::steady_clock::time_point start) {
    auto dt = std::chrono::steady_clock::now() - start;
    return std::chrono::duration<double, std::milli>(dt).count();
}

}  // namespace

KhalimskyInterval::KhalimskyInterval(long long a_, long long b_) : a(a_), b(b_) {
    if (a > b) throw DomainError("khalimsky interval needs a <= b");
}

std::string khalimsky_interval_to_string(const KhalimskyInterval& k) {
    return "[" + std::to_string(k.a) + ", " + std::to_string(k.b) + "]";
}

long long q_value(const Rat& x) {
    if (is_integer(x)) return x.numerator();
    // Non-integers sit strictly between two consecutive integers, exactly one
    // of which is odd; that one is the unique odd integer within distance 1.
    long long f = rat_floor(x);
    return (f % 2 != 0) ? f : f + 1;
}

RationalInterval q_fiber(long long z) {
    if (z % 2 == 0) return RationalInterval::point(Rat(z));
    return RationalInterval::open(Rat(z - 1), Rat(z + 1));
}

RationalInterval q_preimage_interval(const KhalimskyInterval& k) {
    bool a_odd = k.a % 2 != 0;
    bool b_odd = k.b % 2 != 0;
    Rat lo(a_odd ? k.a - 1 : k.a);
    Rat hi(b_odd ? k.b + 1 : k.b);
    return {lo, hi, !a_odd, !b_odd};
}

bool khalimsky_connected(const std::vector<long long>& s) {
    if (s.size() <= 1) return true;
    std::vector<long long> v = s;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v.back() - v.front() + 1 == static_cast<long long>(v.size());
}

std::vector<long long> qn_value(const std::vector<Rat>& x) {
    std::vector<long long> out;
    out.reserve(x.size());
    for (const Rat& c : x) out.push_back(q_value(c));
    return out;
}

namespace {

// One interval's worth of the shyness sweep: the fibers over [a, b] must
// melt into a single rational interval, and that interval must be exactly
// the closed-form preimage.
bool interval_pulls_back_whole(const KhalimskyInterval& k, IntervalUnion* out) {
    IntervalUnion u;
    for (long long z = k.a; z <= k.b; ++z) u.add(q_fiber(z));
    if (out) *out = u;
    return u.size() == 1 && u.parts()[0] == q_preimage_interval(k);
}

nlohmann::json interval_witness(const KhalimskyInterval& k, const IntervalUnion& u) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& p : u.parts()) parts.push_back(interval_to_string(p));
    return {{"interval", {k.a, k.b}}, {"preimage_parts", parts}};
}

}  // namespace

SuiteReport verify_q_shy_window(long long n) {
    if (n < 0) throw DomainError("window radius must be nonnegative");
    auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.suite = "khalimsky-q";
    for (long long a = -n; a <= n; ++a) {
        for (long long b = a; b <= n; ++b) {
            KhalimskyInterval k(a, b);
            ++report.cases;
            IntervalUnion u;
            if (!interval_pulls_back_whole(k, &u)) {
                ++report.failures;
                if (!report.witness) report.witness = interval_witness(k, u);
            }
        }
    }
    report.elapsed_ms = elapsed_since(start);
    return report;
}

SuiteReport verify_qn_shy_boxes(const std::vector<KhalimskyInterval>& window) {
    if (window.empty() || window.size() > 3)
        throw SizeError("box verification supports dimensions 1 through 3");
    for (const auto& w : window)
        if (w.length() > 20)
            throw SizeError("axis window side exceeds 20");

    auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.suite = "khalimsky-qn-boxes";

    // Verify every sub-interval once per axis; a box's preimage is the
    // product of its per-axis preimages, so it is a box exactly when every
    // axis pulls back whole.
    struct AxisCase {
        KhalimskyInterval k;
        bool ok;
    };
    std::vector<std::vector<AxisCase>> axes;
    for (const auto& w : window) {
        std::vector<AxisCase> cases;
        for (long long a = w.a; a <= w.b; ++a)
            for (long long b = a; b <= w.b; ++b) {
                KhalimskyInterval k(a, b);
                cases.push_back({k, interval_pulls_back_whole(k, nullptr)});
            }
        axes.push_back(std::move(cases));
    }

    std::vector<std::size_t> idx(window.size(), 0);
    for (;;) {
        ++report.cases;
        for (std::size_t d = 0; d < idx.size(); ++d) {
            if (!axes[d][idx[d]].ok) {
                ++report.failures;
                if (!report.witness) {
                    nlohmann::json box = nlohmann::json::array();
                    for (std::size_t e = 0; e < idx.size(); ++e) {
                        const auto& k = axes[e][idx[e]].k;
                        box.push_back({k.a, k.b});
                    }
                    IntervalUnion u;
                    interval_pulls_back_whole(axes[d][idx[d]].k, &u);
                    nlohmann::json w = interval_witness(axes[d][idx[d]].k, u);
                    w["box"] = box;
                    w["axis"] = d;
                    report.witness = w;
                }
                break;
            }
        }
        std::size_t d = 0;
        while (d < idx.size() && ++idx[d] == axes[d].size()) idx[d++] = 0;
        if (d == idx.size()) break;
    }

    report.elapsed_ms = elapsed_since(start);
    return report;
}

}  // namespace shylab
