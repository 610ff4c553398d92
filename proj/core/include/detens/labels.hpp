// Copyright (C) 2026 The detens authors
//
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace detens {

enum class LabelNamespace { voc, coco };

std::string to_string(LabelNamespace ns);
LabelNamespace label_namespace_from_string(std::string_view s);

/// A class name qualified by the vocabulary it belongs to. voc names come
/// from the 20-class PASCAL vocabulary, coco names from the 80-class COCO
/// vocabulary; both are lowercase.
struct ClassLabel {
    LabelNamespace ns = LabelNamespace::voc;
    std::string name;

    /// Throws ValidationError when the name is not part of the namespace's
    /// vocabulary.
    void validate() const;

    bool operator==(const ClassLabel&) const = default;
};

/// The 20 PASCAL classes in report column order (aeroplane ... tv).
const std::vector<std::string>& voc_classes();

/// Short report column headers, aligned with voc_classes() (aero ... tv).
const std::vector<std::string>& voc_short_names();

/// The 80 COCO category names.
const std::vector<std::string>& coco_classes();

/// Index into voc_classes(), or -1 when the name is not a PASCAL class.
int voc_class_index(std::string_view name);

bool is_voc_class(std::string_view name);
bool is_coco_class(std::string_view name);

}  // namespace detens
