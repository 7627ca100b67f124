#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homlab/errors.hpp"
#include "homlab/extended_weight.hpp"
#include "homlab/geometry.hpp"
#include "homlab/graph.hpp"
#include "homlab/weight_model.hpp"

namespace homlab {

/// A generated instance. With a threshold the question is "is there a list
/// homomorphism of weight >= threshold"; without one it is "is there a locally
/// surjective homomorphism to the target".
struct ReductionOutput {
    Graph instance;
    Graph target;
    std::optional<WeightModel> weights;
    std::optional<ListAssignment> lists;
    std::optional<ExtendedWeight> threshold;
    std::optional<geometry::SegmentArrangement> arrangement;
    std::optional<int> claimed_slope_count;
    std::string notes;

    bool is_decision() const { return !threshold.has_value(); }

    /// The arrangement (if any) realizes exactly the instance, with matching ids.
    bool arrangement_matches() const {
        return !arrangement || geometry::intersection_graph(*arrangement) == instance;
    }

    bool slope_claim_holds() const {
        return !claimed_slope_count || (arrangement && geometry::slope_count(*arrangement) == *claimed_slope_count);
    }
};

namespace reductions::detail {

using geometry::Point;
using geometry::Rational;
using geometry::Segment;

inline Rational q(long long num, long long den = 1) { return geometry::make_rational(num, den); }

inline Segment seg(const Rational& x1, const Rational& y1, const Rational& x2, const Rational& y2) {
    return Segment(Point{x1, y1}, Point{x2, y2});
}

/// Collects labelled vertices, edges and (optionally) one segment per vertex.
class Builder {
public:
    int add(std::string label) {
        labels_.push_back(std::move(label));
        segments_.emplace_back();
        return static_cast<int>(labels_.size()) - 1;
    }

    int add(std::string label, Segment s) {
        int id = add(std::move(label));
        segments_[id] = std::move(s);
        return id;
    }

    void place(int id, Segment s) { segments_.at(id) = std::move(s); }

    void edge(int u, int v) { edges_.emplace_back(u, v); }

    int size() const { return static_cast<int>(labels_.size()); }

    Graph graph() const { return Graph(size(), edges_, labels_); }

    /// The arrangement, or nothing when some vertex was never placed.
    std::optional<geometry::SegmentArrangement> arrangement() const {
        geometry::SegmentArrangement arr;
        for (int i = 0; i < size(); ++i) {
            if (!segments_[i])
                return std::nullopt;
            arr.add(*segments_[i], labels_[i]);
        }
        return arr;
    }

private:
    std::vector<std::string> labels_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::optional<Segment>> segments_;
};

/// Splits an axis-parallel polyline into `count` segments, consecutive ones
/// sharing an endpoint. Corners are always cut points, so count >= legs.
inline std::vector<Segment> polyline_pieces(const std::vector<Point>& pts, int count) {
    const int legs = static_cast<int>(pts.size()) - 1;
    if (legs < 1 || count < legs)
        throw ContractViolation("polyline needs at least one piece per leg");
    std::vector<int> per(legs, 1);
    for (int extra = count - legs, i = 0; extra > 0; --extra, i = (i + 1) % legs)
        ++per[i];
    std::vector<Segment> out;
    for (int l = 0; l < legs; ++l) {
        const Point& a = pts[l];
        const Point& b = pts[l + 1];
        for (int j = 0; j < per[l]; ++j) {
            Rational t0 = q(j, per[l]), t1 = q(j + 1, per[l]);
            out.push_back(seg(a.x + (b.x - a.x) * t0, a.y + (b.y - a.y) * t0, a.x + (b.x - a.x) * t1,
                              a.y + (b.y - a.y) * t1));
        }
    }
    return out;
}

inline std::string name(const std::string& base, int i) { return base + std::to_string(i); }

inline std::string name(const std::string& base, int i, int j) {
    return base + std::to_string(i) + "." + std::to_string(j);
}

} // namespace reductions::detail

} // namespace homlab
