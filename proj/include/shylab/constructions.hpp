#ifndef SHYLAB_CONSTRUCTIONS_HPP
#define SHYLAB_CONSTRUCTIONS_HPP

#include <vector>

#include "shylab/digital_maps.hpp"

namespace shylab {

// Pointwise composition: apply f, then g. Requires f's codomain and g's
// domain to be the same image.
DigitalMap compose(const DigitalMap& f, const DigitalMap& g);

// Strong product: points are concatenated coordinate tuples (first factor
// varies slowest), two points adjacent iff distinct and every factor pair is
// equal or adjacent. This is the product for which connectivity holds
// componentwise. At least two nonempty factors.
DigitalImage product_images(const std::vector<DigitalImage>& factors);

// Coordinatewise product map between the strong products of the factor
// domains and codomains.
DigitalMap product_map(const std::vector<DigitalMap>& factors);

// Two images glued at one point. Points are relabeled to a fresh 1-D line:
// the left image keeps its indices, the right image's basepoint is
// identified with the left basepoint and its other points follow. The two
// punctured parts share no edge, by construction.
class WedgeImage {
public:
    WedgeImage(const DigitalImage& left, const LatticePoint& left_base, const DigitalImage& right,
               const LatticePoint& right_base);

    const DigitalImage& image() const { return image_; }
    int wedge_index() const { return wedge_index_; }
    LatticePoint wedge_point() const { return image_.point(wedge_index_); }

    // Sorted wedge indices of each part; they intersect exactly in the
    // wedge index.
    std::vector<int> left_part() const;
    std::vector<int> right_part() const;

    // The parts as stand-alone images, indexed like the original factors.
    const DigitalImage& left_image() const { return left_image_; }
    const DigitalImage& right_image() const { return right_image_; }

    int left_size() const { return left_image_.size(); }
    int right_size() const { return right_image_.size(); }

    // Wedge index of the i-th left / right factor point.
    int left_to_wedge(int i) const { return left_to_wedge_[i]; }
    int right_to_wedge(int j) const { return right_to_wedge_[j]; }
    // Factor index of the wedge basepoint on each side.
    int left_base_index() const { return wedge_index_; }
    int right_base_index() const { return right_base_index_; }

private:
    DigitalImage image_;
    DigitalImage left_image_;
    DigitalImage right_image_;
    int wedge_index_;
    int right_base_index_;
    std::vector<int> left_to_wedge_;
    std::vector<int> right_to_wedge_;
};

WedgeImage wedge(const DigitalImage& left, const LatticePoint& left_base,
                 const DigitalImage& right, const LatticePoint& right_base);

// Glue f (on the left part) and g (on the right part) into one map between
// the wedges. The factor maps must match the parts as graphs, index for
// index, and must send basepoint to basepoint.
DigitalMap vee_map(const DigitalMap& f, const DigitalMap& g, const WedgeImage& w,
                   const WedgeImage& w_out);

}  // namespace shylab

#endif
