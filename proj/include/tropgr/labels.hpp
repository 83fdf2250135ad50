#pragma once

#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "tropgr/error.hpp"

namespace tropgr {

// k-subset of {1..n}, strictly increasing
struct PluckerLabel {
  std::vector<int> J;
  auto operator<=>(const PluckerLabel&) const = default;
};

// vertex -> exponent (>= 1 where present), exponents summing to k;
// the n of the ambient polygon disambiguates cyclic arithmetic
struct FlagMonomialLabel {
  int n = 0;
  std::map<int, int> exp;
  auto operator<=>(const FlagMonomialLabel&) const = default;

  int degree() const {
    int s = 0;
    for (auto& [v, e] : exp) s += e;
    return s;
  }
};

// label born from mutation; identified only by its recorded history
struct OpaqueLabel {
  std::string name;
  auto operator<=>(const OpaqueLabel&) const = default;
};

using Label = std::variant<PluckerLabel, FlagMonomialLabel, OpaqueLabel>;

inline PluckerLabel plucker_label(std::vector<int> v) {
  PluckerLabel l{std::move(v)};
  for (size_t i = 0; i + 1 < l.J.size(); ++i)
    require(l.J[i] < l.J[i + 1], "label: subset not strictly increasing");
  return l;
}

inline std::string label_str(const Label& l) {
  std::ostringstream os;
  if (auto* p = std::get_if<PluckerLabel>(&l)) {
    os << "P";
    for (size_t i = 0; i < p->J.size(); ++i) os << (i ? "." : ":") << p->J[i];
  } else if (auto* f = std::get_if<FlagMonomialLabel>(&l)) {
    os << "f";
    bool first = true;
    for (auto& [v, e] : f->exp) {
      os << (first ? ":" : ".") << v;
      if (e != 1) os << "^" << e;
      first = false;
    }
    os << "/" << f->n;
  } else {
    os << std::get<OpaqueLabel>(l).name;
  }
  return os.str();
}

inline int mod1(int v, int n) {  // representative in 1..n
  int r = v % n;
  return r <= 0 ? r + n : r;
}

// all k-subsets of {1..n} in lexicographic order
inline std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= n - (k - static_cast<int>(cur.size())) + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

// all (i1,..,im) with each >= 0 summing to k
inline std::vector<std::vector<int>> compositions(int k, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(parts, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == parts - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (parts > 0) rec(rec, 0, k);
  return out;
}

}  // namespace tropgr
