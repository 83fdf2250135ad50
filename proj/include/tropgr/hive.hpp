#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "tropgr/catalog.hpp"
#include "tropgr/troppoint.hpp"

namespace tropgr {

// Per-step sizes of the cyclic boundary walk of a flag configuration:
// a[i-1] is the multiple a_i of the first fundamental coweight separating
// flag i-1 from flag i (indices cyclic, vertex 0 = vertex n).
struct BoundaryDistances {
  std::vector<Rational> a;

  int n() const { return static_cast<int>(a.size()); }
  const Rational& at(int v) const { return a[static_cast<size_t>(mod1(v, n()) - 1)]; }
};

// One inequality lhs >= rhs of a cone presentation, with its slack
struct ConeIneq {
  std::string id;
  Rational lhs, rhs;

  Rational slack() const { return lhs - rhs; }
};

struct ConeReport {
  std::vector<ConeIneq> ineqs;
  bool member = true;     // every lhs >= rhs
  bool boundary = false;  // member, with at least one exact tie
  Rational min_slack = 0;
  std::string first_violation;  // id of the first failing inequality
};

ConeReport summarize_ineqs(std::vector<ConeIneq> ineqs);

// Rhombus inequality of a hive, in structured form: inside triangle tri
// (ascending), the family whose short diagonal is parallel to the side
// opposite tri[axis], at depth offsets (p, q, r) with p+q+r = k-2.
struct RhombusSlack {
  std::array<int, 3> tri;
  int axis = 0;
  int p = 0, q = 0, r = 0;
  Rational slack = 0;
};

// Value of a flag-minor label on a chart point, with every single-vertex
// label read as 0 (the unimodular normalization of the frames).
Rational hive_value(const TropPoint& h, const FlagMonomialLabel& f);

// All rhombus slacks of a flag chart point, three families of k(k-1)/2 per
// triangle of the chart's triangulation.
std::vector<RhombusSlack> hive_slacks(const TropPoint& h);

// Membership in the hive cone: every rhombus slack nonnegative.
ConeReport hive_check(const TropPoint& h);

// Window sums F_i = sum_{j=1}^{k-1} (j/k) a_{i+j}: the value the lift of a
// cone point takes on the consecutive k-subset {i, .., i+k-1}.
std::vector<Rational> frozen_from_boundary(int k, const BoundaryDistances& a);

// Exact inverse of frozen_from_boundary (the window system is invertible
// for k < n).
BoundaryDistances boundary_from_frozen(int k, const std::vector<Rational>& F);

// A tropical Plucker vector: one value per k-subset of 1..n.
using PluckerVector = std::map<PluckerLabel, Rational>;

int vector_rank(const PluckerVector& y);    // k
int vector_points(const PluckerVector& y);  // n; requires all C(n,k) entries

// Values on the n consecutive windows {i, .., i+k-1}, cyclic, i = 1..n
std::vector<Rational> frozen_values(const PluckerVector& y);

// Boundary distances of y: boundary_from_frozen of its window values
BoundaryDistances boundary_of(const PluckerVector& y);

// Splitting order for reduce_to_plucker; every order yields the same result
// (asserted in tests), kept to make that a checkable claim.
enum class ReduceOrder { LatestBlock, EarliestBlock, LatestUnit };

struct Reduction {
  PluckerLabel J;   // the exponent-one label the input reduces to
  Rational offset;  // value(input) - value(J) for any point with boundary a
};

// Rewrite a flag-minor label as an exponent-one label plus an exact offset
// determined by the boundary distances: each move takes mass at a vertex to
// its cyclic predecessor at cost a_v / k per unit passed.
Reduction reduce_to_plucker(const FlagMonomialLabel& m, const BoundaryDistances& a,
                            ReduceOrder order = ReduceOrder::LatestBlock);

// The distinguished lift of a tropical Plucker vector: the flag chart point
// over T whose exponent-one labels restrict to y and whose remaining labels
// are pinned by the reduction offsets of y's own boundary distances.
TropPoint distinguished_lift(const PluckerVector& y, const Triangulation& T);
TropPoint distinguished_lift(const PluckerVector& y);  // fan at vertex 1

// Membership of y in the image of the hive cone: the n window inequalities
// F_i + ((k-1)/k) a_{i+k} >= y({i, .., i+k-2, i+k}).
ConeReport cone_check(const PluckerVector& y);

// Torus vector whose action on the zero point produces l_lamination(i):
// component mod1(i+off) is (k-1-off)/k for off = 0..k-1, else 0.
ScalingVector l_scaling(int i, int k, int n);

// Tropical Plucker vector of the i-th boundary lamination, the point whose
// boundary steps j = i..i+k-1 are one coweight unit and all others zero:
// equivalently l_scaling(i) acting on the zero vector, P_J = sum_{j in J}
// l_scaling(i)_j.
PluckerVector l_lamination(int i, int k, int n);

// Shift y along the lineality space spanned by the laminations: adds
// sum_i c[i-1] * l_lamination(i).
PluckerVector act_lineality(const PluckerVector& y, const std::vector<Rational>& c);

// Solve sum_i c_i * l_scaling(i) = target exactly (possible for k < n)
std::vector<Rational> lineality_coefficients(int k, const std::vector<Rational>& target);

// Uniform lamination coefficients making cone_check(act_lineality(y, c))
// pass: each uniform unit raises every window slack by k-1.
std::vector<Rational> cone_repair(const PluckerVector& y);

// One instance of the transfer identity: moving all mass of lhs at vertex
// `vertex` onto its cyclic successor multiplies nothing but shifts the value
// by rate * moved, where rate = a_successor / k.
struct TransferInstance {
  FlagMonomialLabel lhs, rhs;
  int vertex = 0;  // the vertex whose mass moves (cyclic predecessor of the target)
  int moved = 0;
  Rational lhs_value, rhs_value, rate;

  bool holds() const { return lhs_value == rhs_value + rate * moved; }
};

struct TransferReport {
  std::vector<TransferInstance> instances;
  int failures = 0;

  bool all_hold() const { return failures == 0; }
};

// Check every transfer identity both of whose labels are readable on the
// chart of x (chart labels or single-vertex labels): for each pair u < v of
// cyclically adjacent vertices and each split, value(.. u^i v^j ..) must
// equal value(.. v^{i+j} ..) + (a_v / k) * i.
TransferReport check_transfer_identities(const TropPoint& x, const BoundaryDistances& a);

// The exhaustive variant: every transfer identity both of whose labels have
// at most three distinct vertices, evaluated exactly by chart changes onto
// triangulations containing the supports.
TransferReport check_transfer_identities_global(const TropPoint& x,
                                                const BoundaryDistances& a);

struct IntegralityReport {
  BoundaryDistances a;
  bool a_integral = false;
  bool a_nonnegative = false;
  bool pluckers_integral = false;
};

// Integral structure of the cone: a point is integral when its boundary
// distances are integers (its Plucker values may still be k-th fractions).
IntegralityReport integrality_check(const PluckerVector& y);

struct WeightReport {
  std::vector<Rational> weights;  // multiples of the first fundamental weight
  Rational degree;                // their sum
};

// Multi-weight of an integral cone point; errors on non-integral boundary.
WeightReport weight_report(const PluckerVector& y);

// Experimental normalization towards a common polytope model: acts by the
// staircase vector b/k with b_i = a_1 + .. + a_{i-1}.
PluckerVector rw_normalize(const PluckerVector& y, const BoundaryDistances& a);

// Exact chart change of a flag chart point onto the chart of triangulation
// T, walking diagonal flips (through the fan at vertex 1).
TropPoint to_triangulation(const TropPoint& x, const Triangulation& T);

// Exact value of any flag-minor label with at most three distinct vertices
// on x, read off after moving to a chart whose triangulation contains the
// support.  Single-vertex labels are 0.
Rational eval_flag_label(const TropPoint& x, const FlagMonomialLabel& f);

}  // namespace tropgr
