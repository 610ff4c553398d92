// Copyright (C) 2026 The detens authors
//
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <string>

namespace detens {

/// Axis-aligned bounding box in continuous pixel coordinates, 0-based and
/// half-open on the max edges: width = x_max - x_min, height = y_max - y_min.
/// Boxes touching only along an edge have zero overlap.
struct BBox {
    double x_min = 0.0;
    double y_min = 0.0;
    double x_max = 0.0;
    double y_max = 0.0;

    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }
    double area() const { return width() * height(); }
    double center_x() const { return 0.5 * (x_min + x_max); }
    double center_y() const { return 0.5 * (y_min + y_max); }

    bool valid() const;
    /// Throws ValidationError when the box is degenerate or non-finite;
    /// `what` names the box in the message.
    void validate(const std::string& what = "bbox") const;

    bool operator==(const BBox&) const = default;
};

/// Area of the geometric intersection. 0 when the boxes are disjoint or touch
/// only on an edge.
double intersection_area(const BBox& a, const BBox& b);

/// Intersection over union, in [0, 1]. Symmetric; 0 for disjoint boxes and
/// 1 exactly when a == b.
double iou(const BBox& a, const BBox& b);

/// True when the box lies inside [0, width] x [0, height].
bool inside_image(const BBox& b, double width, double height);

/// Intersects the box with [0, width] x [0, height]. Throws ValidationError
/// when nothing remains.
BBox clip_to_image(const BBox& b, double width, double height);

std::string to_string(const BBox& b);

}  // namespace detens
