#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "homlab/errors.hpp"
#include "homlab/graph.hpp"

namespace homlab::geometry {

/// Exact rational number; always reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0)
        throw MalformedInput("zero denominator");
    return Rational(num) / Rational(den);
}

/// Parses `p` or `p/q` with integer p, q.
inline Rational parse_rational(const std::string& text) {
    using boost::multiprecision::cpp_int;
    auto parse_int = [&](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size() || s.find_first_not_of("0123456789", i) != std::string::npos)
            throw MalformedInput("bad rational '" + text + "'");
        return cpp_int(s[0] == '+' ? s.substr(1) : s);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(parse_int(text));
    cpp_int num = parse_int(text.substr(0, slash));
    cpp_int den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw MalformedInput("zero denominator in '" + text + "'");
    return Rational(num, den);
}

inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Closed segment with distinct endpoints.
class Segment {
public:
    Segment(Point p, Point q) : p_(std::move(p)), q_(std::move(q)) {
        if (p_ == q_)
            throw MalformedInput("degenerate segment");
    }

    Segment(const Rational& x1, const Rational& y1, const Rational& x2, const Rational& y2)
        : Segment(Point{x1, y1}, Point{x2, y2}) {}

    const Point& p() const { return p_; }
    const Point& q() const { return q_; }

    bool is_vertical() const { return p_.x == q_.x; }
    bool is_horizontal() const { return p_.y == q_.y; }

    /// dy/dx; empty for vertical segments.
    std::optional<Rational> slope() const {
        if (is_vertical())
            return std::nullopt;
        return (q_.y - p_.y) / (q_.x - p_.x);
    }

private:
    Point p_;
    Point q_;
};

namespace detail {
inline int orientation(const Point& a, const Point& b, const Point& c) {
    Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return cross > 0 ? 1 : (cross < 0 ? -1 : 0);
}

// c is collinear with ab; is it inside the bounding box?
inline bool on_segment(const Point& a, const Point& b, const Point& c) {
    return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
           c.y <= std::max(a.y, b.y);
}
} // namespace detail

/// True iff the closed segments share a point; touching and collinear overlap count.
inline bool segments_intersect(const Segment& s, const Segment& t) {
    using detail::on_segment;
    using detail::orientation;
    const Point &a = s.p(), &b = s.q(), &c = t.p(), &d = t.q();
    if (std::max(a.x, b.x) < std::min(c.x, d.x) || std::max(c.x, d.x) < std::min(a.x, b.x) ||
        std::max(a.y, b.y) < std::min(c.y, d.y) || std::max(c.y, d.y) < std::min(a.y, b.y))
        return false;
    int o1 = orientation(a, b, c);
    int o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a);
    int o4 = orientation(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0)
        return true;
    return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
           (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

/// Segments with ids 0..n-1 (the position) and optional labels.
class SegmentArrangement {
public:
    SegmentArrangement() = default;

    int add(Segment s, std::string label = {}) {
        segments_.push_back(std::move(s));
        labels_.push_back(std::move(label));
        return static_cast<int>(segments_.size()) - 1;
    }

    int size() const { return static_cast<int>(segments_.size()); }
    bool empty() const { return segments_.empty(); }
    const Segment& operator[](int i) const { return segments_.at(i); }
    const std::vector<Segment>& segments() const { return segments_; }
    const std::string& label(int i) const { return labels_.at(i); }

    /// Sub-arrangement of the given ids, in that order.
    SegmentArrangement subset(const std::vector<int>& ids) const {
        SegmentArrangement out;
        for (int i : ids)
            out.add(segments_.at(i), labels_.at(i));
        return out;
    }

private:
    std::vector<Segment> segments_;
    std::vector<std::string> labels_;
};

/// Graph on the segments with ij adjacent iff they intersect (i != j).
inline Graph intersection_graph(const SegmentArrangement& arr) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < arr.size(); ++i)
        for (int j = i + 1; j < arr.size(); ++j)
            if (segments_intersect(arr[i], arr[j]))
                es.emplace_back(i, j);
    return Graph(arr.size(), es);
}

/// Number of distinct slopes; all vertical segments share one slope.
inline int slope_count(const SegmentArrangement& arr) {
    std::set<Rational> slopes;
    bool vertical = false;
    for (const Segment& s : arr.segments()) {
        if (auto m = s.slope())
            slopes.insert(*m);
        else
            vertical = true;
    }
    return static_cast<int>(slopes.size()) + (vertical ? 1 : 0);
}

} // namespace homlab::geometry
