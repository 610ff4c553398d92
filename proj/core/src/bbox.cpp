// Copyright (C) 2026 The detens authors
//
// SPDX-License-Identifier: Apache-2.0
//

#include "detens/bbox.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "detens/errors.hpp"

namespace detens {

bool BBox::valid() const {
    return std::isfinite(x_min) && std::isfinite(y_min) && std::isfinite(x_max) &&
           std::isfinite(y_max) && x_max > x_min && y_max > y_min;
}

void BBox::validate(const std::string& what) const {
    if (!std::isfinite(x_min) || !std::isfinite(y_min) || !std::isfinite(x_max) ||
        !std::isfinite(y_max)) {
        throw ValidationError(what + ": non-finite coordinate in " + to_string(*this));
    }
    if (x_max <= x_min || y_max <= y_min) {
        throw ValidationError(what + ": degenerate box " + to_string(*this) +
                              " (requires x_max > x_min and y_max > y_min)");
    }
}

double intersection_area(const BBox& a, const BBox& b) {
    const double w = std::min(a.x_max, b.x_max) - std::max(a.x_min, b.x_min);
    const double h = std::min(a.y_max, b.y_max) - std::max(a.y_min, b.y_min);
    if (w <= 0.0 || h <= 0.0) return 0.0;
    return w * h;
}

double iou(const BBox& a, const BBox& b) {
    const double inter = intersection_area(a, b);
    if (inter <= 0.0) return 0.0;
    const double uni = a.area() + b.area() - inter;
    return inter / uni;
}

bool inside_image(const BBox& b, double width, double height) {
    return b.x_min >= 0.0 && b.y_min >= 0.0 && b.x_max <= width && b.y_max <= height;
}

BBox clip_to_image(const BBox& b, double width, double height) {
    BBox c{std::clamp(b.x_min, 0.0, width), std::clamp(b.y_min, 0.0, height),
           std::clamp(b.x_max, 0.0, width), std::clamp(b.y_max, 0.0, height)};
    if (c.x_max <= c.x_min || c.y_max <= c.y_min) {
        throw ValidationError("clip_to_image: box " + to_string(b) +
                              " lies outside the image");
    }
    return c;
}

std::string to_string(const BBox& b) {
    std::ostringstream os;
    os << "(" << b.x_min << ", " << b.y_min << ", " << b.x_max << ", " << b.y_max << ")";
    return os.str();
}

}  // namespace detens
