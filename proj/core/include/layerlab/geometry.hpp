#pragma once

#include <cstdint>

#include "layerlab/error.hpp"

namespace layerlab {

/// Shared shape of everything belonging to one clip: frame raster size and
/// frame count. All masks, flows, tracks and images of a clip must agree on
/// one geometry.
struct ClipGeometry {
    int height = 0;
    int width = 0;
    int frame_count = 0;

    std::int64_t frame_pixels() const {
        return static_cast<std::int64_t>(height) * width;
    }

    bool same_frame(const ClipGeometry& other) const {
        return height == other.height && width == other.width;
    }

    bool operator==(const ClipGeometry&) const = default;

    void validate() const {
        if (height < 1 || width < 1)
            throw InvalidArgument("clip geometry must have positive height and width");
        if (frame_count < 2)
            throw InvalidArgument("clip geometry needs at least 2 frames");
    }
};

}  // namespace layerlab
