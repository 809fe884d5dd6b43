#pragma once

#include <cstdint>
#include <vector>

namespace structmot {

// Decoded frame pixels, row-major RGB, 8 bits per channel.
struct FrameImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;  // width * height * 3

  bool valid() const {
    return width > 0 && height > 0 &&
           rgb.size() == static_cast<std::size_t>(width) * height * 3;
  }
};

}  // namespace structmot
