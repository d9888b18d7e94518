#include "shylab/constructions.hpp"

#include <algorithm>

#include "shylab/errors.hpp"

namespace shylab {

DigitalMap compose(const DigitalMap& f, const DigitalMap& g) {
    if (!(f.codomain() == g.domain()))
        throw ShapeError("compose needs f's codomain to equal g's domain");
    std::vector<int> table(f.domain().size());
    for (int i = 0; i < f.domain().size(); ++i) table[i] = g.apply_index(f.apply_index(i));
    return {f.domain(), g.codomain(), std::move(table)};
}

namespace {

std::vector<int> decode_product_index(int idx, const std::vector<int>& sizes) {
    std::vector<int> coords(sizes.size());
    for (std::size_t d = sizes.size(); d-- > 0;) {
        coords[d] = idx % sizes[d];
        idx /= sizes[d];
    }
    return coords;
}

int encode_product_index(const std::vector<int>& coords, const std::vector<int>& sizes) {
    int idx = 0;
    for (std::size_t d = 0; d < sizes.size(); ++d) idx = idx * sizes[d] + coords[d];
    return idx;
}

}  // namespace

DigitalImage product_images(const std::vector<DigitalImage>& factors) {
    if (factors.size() < 2) throw DomainError("a product needs at least two factors");
    std::vector<int> sizes;
    long long total = 1;
    for (const auto& x : factors) {
        if (x.size() == 0) throw DomainError("product factors must be nonempty");
        sizes.push_back(x.size());
        total *= x.size();
    }

    std::vector<LatticePoint> points;
    points.reserve(total);
    for (int idx = 0; idx < total; ++idx) {
        std::vector<int> coords;
        auto factor_idx = decode_product_index(idx, sizes);
        for (std::size_t d = 0; d < factors.size(); ++d) {
            const auto& p = factors[d].point(factor_idx[d]);
            coords.insert(coords.end(), p.coords.begin(), p.coords.end());
        }
        points.emplace_back(std::move(coords));
    }

    // strong-product edges: distinct tuples, each slot equal or adjacent
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < total; ++a) {
        auto ca = decode_product_index(a, sizes);
        for (int b = a + 1; b < total; ++b) {
            auto cb = decode_product_index(b, sizes);
            bool ok = true;
            for (std::size_t d = 0; ok && d < factors.size(); ++d)
                ok = ca[d] == cb[d] || factors[d].adjacent_indices(ca[d], cb[d]);
            if (ok) edges.emplace_back(a, b);
        }
    }
    return {std::move(points), ExplicitEdges{std::move(edges)}};
}

DigitalMap product_map(const std::vector<DigitalMap>& factors) {
    if (factors.size() < 2) throw DomainError("a product needs at least two factors");
    std::vector<DigitalImage> domains, codomains;
    std::vector<int> dsizes, csizes;
    for (const auto& f : factors) {
        domains.push_back(f.domain());
        codomains.push_back(f.codomain());
        dsizes.push_back(f.domain().size());
        csizes.push_back(f.codomain().size());
    }
    DigitalImage dom = product_images(domains);
    DigitalImage cod = product_images(codomains);

    std::vector<int> table(dom.size());
    for (int idx = 0; idx < dom.size(); ++idx) {
        auto coords = decode_product_index(idx, dsizes);
        for (std::size_t d = 0; d < factors.size(); ++d) coords[d] = factors[d].apply_index(coords[d]);
        table[idx] = encode_product_index(coords, csizes);
    }
    return {std::move(dom), std::move(cod), std::move(table)};
}

WedgeImage::WedgeImage(const DigitalImage& left, const LatticePoint& left_base,
                       const DigitalImage& right, const LatticePoint& right_base)
    // placeholder members, assigned below once the labeling is computed
    : image_({LatticePoint{0}}, CuAdjacency{1}),
      left_image_({LatticePoint{0}}, CuAdjacency{1}),
      right_image_({LatticePoint{0}}, CuAdjacency{1}),
      wedge_index_(left.index_of(left_base)),
      right_base_index_(right.index_of(right_base)) {
    if (wedge_index_ < 0 || right_base_index_ < 0)
        throw DomainError("wedge basepoint is not a point of its image");

    int n = left.size(), m = right.size();
    left_to_wedge_.resize(n);
    for (int i = 0; i < n; ++i) left_to_wedge_[i] = i;
    right_to_wedge_.resize(m);
    for (int j = 0; j < m; ++j) {
        if (j == right_base_index_)
            right_to_wedge_[j] = wedge_index_;
        else
            right_to_wedge_[j] = n + (j < right_base_index_ ? j : j - 1);
    }

    std::vector<LatticePoint> points;
    for (int w = 0; w < n + m - 1; ++w) points.push_back(LatticePoint{w});

    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : left.edges()) edges.emplace_back(a, b);
    for (const auto& [a, b] : right.edges())
        edges.emplace_back(right_to_wedge_[a], right_to_wedge_[b]);

    image_ = DigitalImage(std::move(points), ExplicitEdges{std::move(edges)});

    // the parts as stand-alone images, indexed like the factors
    auto induced = [this](const std::vector<int>& to_wedge) {
        std::vector<LatticePoint> pts;
        std::vector<int> back(image_.size(), -1);
        for (std::size_t i = 0; i < to_wedge.size(); ++i) {
            pts.push_back(image_.point(to_wedge[i]));
            back[to_wedge[i]] = static_cast<int>(i);
        }
        std::vector<std::pair<int, int>> es;
        for (const auto& [a, b] : image_.edges())
            if (back[a] >= 0 && back[b] >= 0) es.emplace_back(back[a], back[b]);
        return DigitalImage(std::move(pts), ExplicitEdges{std::move(es)});
    };
    left_image_ = induced(left_to_wedge_);
    right_image_ = induced(right_to_wedge_);

    // separation: the only shared index is the basepoint, and no edge joins
    // the punctured parts (true by construction, checked anyway)
    for (const auto& [a, b] : image_.edges()) {
        bool a_left = a < n, b_left = b < n;
        bool a_right = a == wedge_index_ || a >= n, b_right = b == wedge_index_ || b >= n;
        if ((a_left && !a_right && b_right && !b_left) ||
            (b_left && !b_right && a_right && !a_left))
            throw ShapeError("wedge parts are not separated");
    }
}

std::vector<int> WedgeImage::left_part() const {
    std::vector<int> part = left_to_wedge_;
    std::sort(part.begin(), part.end());
    return part;
}

std::vector<int> WedgeImage::right_part() const {
    std::vector<int> part = right_to_wedge_;
    std::sort(part.begin(), part.end());
    return part;
}

WedgeImage wedge(const DigitalImage& left, const LatticePoint& left_base,
                 const DigitalImage& right, const LatticePoint& right_base) {
    return {left, left_base, right, right_base};
}

DigitalMap vee_map(const DigitalMap& f, const DigitalMap& g, const WedgeImage& w,
                   const WedgeImage& w_out) {
    auto matches = [](const DigitalImage& got, const DigitalImage& part) {
        return got.size() == part.size() && got.edges() == part.edges();
    };
    if (!matches(f.domain(), w.left_image()) || !matches(f.codomain(), w_out.left_image()))
        throw ShapeError("left factor does not fit the wedge's left parts");
    if (!matches(g.domain(), w.right_image()) || !matches(g.codomain(), w_out.right_image()))
        throw ShapeError("right factor does not fit the wedge's right parts");
    if (f.apply_index(w.left_base_index()) != w_out.left_base_index() ||
        g.apply_index(w.right_base_index()) != w_out.right_base_index())
        throw PointednessError("factor maps must send basepoint to basepoint");

    std::vector<int> table(w.image().size(), -1);
    for (int i = 0; i < w.left_size(); ++i)
        table[w.left_to_wedge(i)] = w_out.left_to_wedge(f.apply_index(i));
    for (int j = 0; j < w.right_size(); ++j)
        table[w.right_to_wedge(j)] = w_out.right_to_wedge(g.apply_index(j));
    return {w.image(), w_out.image(), std::move(table)};
}

}  // namespace shylab
