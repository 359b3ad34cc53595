#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vfk/io.hpp"
#include "vfk/vfpres.hpp"

namespace vfk::testing {

inline std::string data_path(const std::string& name) { return std::string(VFK_DATA_DIR) + "/" + name; }

inline VfPresentation load_presentation(const std::string& name) {
  return VfPresentation::validate(presentation_from_json(read_json_file(data_path(name))));
}

inline GrammarFile load_grammar(const std::string& name) { return grammar_from_json(read_json_file(data_path(name))); }

inline GraphOfGroups load_gog(const std::string& name) {
  return GraphOfGroups::build(gog_from_json(read_json_file(data_path(name))));
}

/// Calls f on every word of length ≤ max_len over an alphabet of size n,
/// shortest first.
inline void for_each_word(int n, int max_len, const std::function<void(const Word&)>& f) {
  Word w;
  f(w);
  for (int len = 1; len <= max_len; ++len) {
    w.assign(len, 0);
    while (true) {
      f(w);
      int i = len - 1;
      while (i >= 0 && w[i] == n - 1) w[i--] = 0;
      if (i < 0) break;
      ++w[i];
    }
  }
}

/// Integer 2×2 matrices; exact for the short words used in tests.
using Mat = std::array<std::int64_t, 4>;

inline Mat mat_mul(const Mat& a, const Mat& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

inline constexpr Mat kIdentity{1, 0, 0, 1};

/// Sign normalisation for PSL(2, Z).
inline Mat projective(Mat m) {
  for (auto v : m) {
    if (v != 0) {
      if (v < 0)
        for (auto& e : m) e = -e;
      break;
    }
  }
  return m;
}

/// Faithful affine model of D∞ on Z: t ↦ x+1, s ↦ −x, as matrices
/// [[±1, b], [0, 1]]. Letters follow the Σ layout of data/dinf.json.
inline std::vector<Mat> dinf_matrices(const VfPresentation& p) {
  std::vector<Mat> m(p.sigma().size());
  const Mat t{1, 1, 0, 1}, tbar{1, -1, 0, 1}, s{-1, 0, 0, 1};
  m[p.sigma().at("t")] = t;
  m[p.sigma().at("t^-")] = tbar;
  m[p.sigma().at("s")] = s;
  m[p.sigma().at("s^-")] = s;
  return m;
}

inline Mat evaluate(const std::vector<Mat>& m, const Word& w) {
  Mat r = kIdentity;
  for (int a : w) r = mat_mul(r, m[a]);
  return r;
}

}  // namespace vfk::testing
