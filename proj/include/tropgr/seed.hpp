#pragma once

#include <map>
#include <memory>
#include <vector>

#include "tropgr/labels.hpp"
#include "tropgr/rational.hpp"

namespace tropgr {

// Exchange data (I, I0, B, d): dense rational B with b_ij d_j = -b_ji d_i;
// entries integral unless both endpoints are frozen.
struct Seed {
  std::vector<std::vector<Rational>> B;
  std::vector<bool> frozen;
  std::vector<long> d;

  int size() const { return static_cast<int>(frozen.size()); }
};

inline void validate_seed(const Seed& s) {
  int m = s.size();
  require(static_cast<int>(s.B.size()) == m && static_cast<int>(s.d.size()) == m,
          "seed: shape mismatch");
  for (int i = 0; i < m; ++i) {
    require(static_cast<int>(s.B[i].size()) == m, "seed: row length mismatch");
    require(s.d[i] > 0, "seed: symmetrizer must be positive");
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      require(s.B[i][j] * s.d[j] == -s.B[j][i] * s.d[i],
              "seed: not skew-symmetrizable");
      if (!(s.frozen[i] && s.frozen[j]))
        require(is_integer(s.B[i][j]), "seed: non-integral exchange entry");
    }
}

struct LabeledSeed {
  Seed seed;
  std::vector<Label> labels;
  std::map<Label, int> index;

  int find(const Label& l) const {
    auto it = index.find(l);
    return it == index.end() ? -1 : it->second;
  }
};

using ChartRef = std::shared_ptr<const LabeledSeed>;

inline ChartRef make_chart(Seed s, std::vector<Label> labels) {
  auto ls = std::make_shared<LabeledSeed>();
  require(static_cast<int>(labels.size()) == s.size(), "seed: label count mismatch");
  ls->seed = std::move(s);
  ls->labels = std::move(labels);
  for (int i = 0; i < ls->seed.size(); ++i) {
    auto [it, fresh] = ls->index.emplace(ls->labels[i], i);
    require(fresh, "seed: duplicate label " + label_str(ls->labels[i]));
  }
  return ls;
}

// chart coordinates valued in a semifield SF
template <class SF>
struct Point {
  ChartRef chart;
  std::vector<typename SF::Value> coords;
};

}  // namespace tropgr
