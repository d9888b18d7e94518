#include "shylab/digital_maps.hpp"

#include <algorithm>
#include <numeric>

#include "shylab/errors.hpp"

namespace shylab {

DigitalMap::DigitalMap(DigitalImage domain, DigitalImage codomain, std::vector<int> table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
    if (static_cast<int>(table_.size()) != domain_.size())
        throw DomainError("map table must assign a value to every domain point");
    for (int v : table_)
        if (v < 0 || v >= codomain_.size())
            throw DomainError("map table value out of codomain range");
}

LatticePoint DigitalMap::apply(const LatticePoint& p) const {
    int i = domain_.index_of(p);
    if (i < 0) throw DomainError("apply: point not in map domain");
    return codomain_.point(table_[i]);
}

std::vector<int> DigitalMap::image_indices() const {
    std::vector<int> img(table_);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
}

std::vector<int> DigitalMap::preimage_indices(std::span<const int> codomain_set) const {
    std::vector<int> wanted(codomain_set.begin(), codomain_set.end());
    std::sort(wanted.begin(), wanted.end());
    std::vector<int> pre;
    for (int i = 0; i < domain_.size(); ++i)
        if (std::binary_search(wanted.begin(), wanted.end(), table_[i])) pre.push_back(i);
    return pre;
}

bool is_continuous(const DigitalMap& f) {
    for (auto [a, b] : f.domain().edges()) {
        int fa = f.apply_index(a);
        int fb = f.apply_index(b);
        if (fa != fb && !f.codomain().adjacent_indices(fa, fb)) return false;
    }
    return true;
}

bool is_continuous_oracle(const DigitalMap& f) {
    auto dom = all_indices(f.domain());
    bool ok = true;
    for_each_connected_subset(f.domain(), dom, std::nullopt, [&](const std::vector<int>& A) {
        std::vector<int> img;
        img.reserve(A.size());
        for (int i : A) img.push_back(f.apply_index(i));
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        if (!is_connected_subset(f.codomain(), img)) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

bool is_surjective(const DigitalMap& f) {
    return static_cast<int>(f.image_indices().size()) == f.codomain().size();
}

namespace {

void require_continuous(const DigitalMap& f, const char* op) {
    if (!is_continuous(f))
        throw PreconditionError(std::string(op) + " requires a continuous map");
}

ShyVerdict failure(const DigitalMap& f, std::vector<int> subset) {
    ShyVerdict v;
    v.shy = false;
    v.witness_preimage = f.preimage_indices(subset);
    v.witness = std::move(subset);
    return v;
}

}  // namespace

ShyVerdict is_shy(const DigitalMap& f) {
    require_continuous(f, "is_shy");
    auto image = f.image_indices();

    for (int y : image) {
        std::vector<int> fiber = f.preimage_indices(std::vector<int>{y});
        if (!is_connected_subset(f.domain(), fiber)) return failure(f, {y});
    }
    for (auto [y0, y1] : f.codomain().edges()) {
        bool in0 = std::binary_search(image.begin(), image.end(), y0);
        bool in1 = std::binary_search(image.begin(), image.end(), y1);
        if (!in0 || !in1) continue;  // image-restricted: ignore pairs leaving f(X)
        std::vector<int> pre = f.preimage_indices(std::vector<int>{y0, y1});
        if (!is_connected_subset(f.domain(), pre)) return failure(f, {y0, y1});
    }
    return ShyVerdict{};
}

ShyVerdict shy_oracle(const DigitalMap& f) {
    require_continuous(f, "shy_oracle");
    auto image = f.image_indices();
    if (static_cast<int>(image.size()) > enumeration_limit())
        throw SizeError("shy_oracle: image of " + std::to_string(image.size()) +
                        " points exceeds the enumeration limit of " +
                        std::to_string(enumeration_limit()));

    auto point_key = [&](const std::vector<int>& subset) {
        std::vector<LatticePoint> pts;
        pts.reserve(subset.size());
        for (int y : subset) pts.push_back(f.codomain().point(y));
        std::sort(pts.begin(), pts.end());
        return pts;
    };

    std::vector<int> best;
    std::vector<LatticePoint> best_key;
    for_each_connected_subset(f.codomain(), image, std::nullopt, [&](const std::vector<int>& Yp) {
        std::vector<int> pre = f.preimage_indices(Yp);
        if (is_connected_subset(f.domain(), pre)) return true;
        auto key = point_key(Yp);
        if (best.empty() || Yp.size() < best.size() ||
            (Yp.size() == best.size() && key < best_key)) {
            best = Yp;
            best_key = std::move(key);
        }
        return true;
    });

    if (best.empty()) return ShyVerdict{};
    return failure(f, std::move(best));
}

int cut_point_audit(const DigitalMap& f, const LatticePoint& r) {
    int ri = f.domain().index_of(r);
    if (ri < 0) throw DomainError("cut_point_audit: point not in map domain");
    if (!is_connected_subset(f.domain(), all_indices(f.domain())))
        throw PreconditionError("cut_point_audit requires a connected domain");
    if (!is_digital_interval(f.codomain()))
        throw ShapeError("cut_point_audit requires a digital interval codomain");
    if (!is_shy(f).shy) throw PreconditionError("cut_point_audit requires a shy map");

    std::vector<int> rest;
    for (int i = 0; i < f.domain().size(); ++i)
        if (i != ri) rest.push_back(i);
    int fr = f.apply_index(ri);

    int nonconstant = 0;
    for (const auto& comp : connected_components(f.domain(), rest))
        if (std::any_of(comp.begin(), comp.end(), [&](int i) { return f.apply_index(i) != fr; }))
            ++nonconstant;
    return nonconstant;
}

bool is_cycle_graph(const DigitalImage& img) {
    if (img.size() < 3) return false;
    for (int i = 0; i < img.size(); ++i)
        if (img.neighbors(i).size() != 2) return false;
    return is_connected_subset(img, all_indices(img));
}

bool is_digital_interval(const DigitalImage& img) {
    if (img.size() == 0 || img.dim() != 1) return false;
    std::vector<int> xs;
    for (const auto& p : img.points()) xs.push_back(p.coords[0]);
    auto [mn, mx] = std::minmax_element(xs.begin(), xs.end());
    if (*mx - *mn + 1 != img.size()) return false;  // points distinct by invariant
    for (int i = 0; i < img.size(); ++i)
        for (int j = i + 1; j < img.size(); ++j) {
            bool expect = std::abs(xs[i] - xs[j]) == 1;
            if (img.adjacent_indices(i, j) != expect) return false;
        }
    return true;
}

namespace {

// Deterministic traversal of a cycle graph: start at index 0, step to the
// smaller-indexed neighbor first.
std::vector<int> cycle_order(const DigitalImage& img) {
    std::vector<int> order{0, img.neighbors(0)[0]};
    while (static_cast<int>(order.size()) < img.size()) {
        int cur = order.back();
        int prev = order[order.size() - 2];
        const auto& nb = img.neighbors(cur);
        order.push_back(nb[0] == prev ? nb[1] : nb[0]);
    }
    return order;
}

}  // namespace

int degree_of_cycle_map(const DigitalMap& f) {
    if (!is_cycle_graph(f.domain()) || f.domain().size() < 4)
        throw ShapeError("degree_of_cycle_map requires a cycle domain with at least 4 points");
    if (!is_cycle_graph(f.codomain()) || f.codomain().size() < 4)
        throw ShapeError("degree_of_cycle_map requires a cycle codomain with at least 4 points");
    require_continuous(f, "degree_of_cycle_map");

    const int m = f.domain().size();
    const int n = f.codomain().size();
    auto dom_order = cycle_order(f.domain());
    auto cod_order = cycle_order(f.codomain());
    std::vector<int> pos(n);
    for (int k = 0; k < n; ++k) pos[cod_order[k]] = k;

    int total = 0;
    for (int i = 0; i < m; ++i) {
        int a = pos[f.apply_index(dom_order[i])];
        int b = pos[f.apply_index(dom_order[(i + 1) % m])];
        int d = ((b - a) % n + n) % n;
        if (d == 0)
            continue;
        else if (d == 1)
            ++total;
        else if (d == n - 1)
            --total;
        else
            throw PreconditionError("degree_of_cycle_map: step skips around the codomain cycle");
    }
    return total / n;  // signed displacement of a continuous cycle map is a multiple of n
}

bool pi1_surjectivity_cycle(const DigitalMap& f) {
    int d = degree_of_cycle_map(f);
    return d == 1 || d == -1;
}

DigitalMap identity_map(const DigitalImage& img) {
    std::vector<int> table(img.size());
    std::iota(table.begin(), table.end(), 0);
    return DigitalMap(img, img, std::move(table));
}

DigitalMap constant_map(const DigitalImage& domain, const DigitalImage& codomain, int value_index) {
    if (value_index < 0 || value_index >= codomain.size())
        throw DomainError("constant_map: value index out of codomain range");
    return DigitalMap(domain, codomain, std::vector<int>(domain.size(), value_index));
}

}  // namespace shylab
