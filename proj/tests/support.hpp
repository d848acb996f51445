#pragma once

#include "gridguard/pipeline.hpp"

#include <string>
#include <vector>

namespace gridguard::testing {

inline std::string data_path(const std::string& name) {
  return std::string(GRIDGUARD_DATA_DIR) + "/" + name;
}

inline SimplePolygon load(const std::string& name) { return parse_polygon(data_path(name)); }

inline Point pt(int x, int y) { return Point{Scalar(x), Scalar(y)}; }

inline Point pt(int xn, int xd, int yn, int yd) {
  Scalar x(xn, xd), y(yn, yd);
  x.canonicalize();
  y.canonicalize();
  return Point{x, y};
}

inline SimplePolygon unit_square() {
  return SimplePolygon::make({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
}

inline SimplePolygon lshape() {
  return SimplePolygon::make({pt(0, 0), pt(2, 0), pt(2, 1), pt(1, 1), pt(1, 2), pt(0, 2)});
}

inline const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names{"square.poly",  "pentagon.poly", "lshape.poly",
                                              "comb3.poly",   "comb5.poly",    "star8.poly",
                                              "random12.poly"};
  return names;
}

}  // namespace gridguard::testing
