#pragma once

namespace rtdist {

// Active branch of a piecewise distribution evaluation. For the triangle
// functions Seg1..Seg4 are the intervals [0,h), [h,a), [a,b), [b,c); the
// rectangle functions use Seg1..Seg3 for [0,a), [a,b), [b,c]. Seg3 of the
// triangle is never reported when a == b (the interval is empty).
enum class Branch { Below, Seg1, Seg2, Seg3, Seg4, Above };

constexpr const char* to_string(Branch branch) {
  switch (branch) {
    case Branch::Below: return "Below";
    case Branch::Seg1: return "Seg1";
    case Branch::Seg2: return "Seg2";
    case Branch::Seg3: return "Seg3";
    case Branch::Seg4: return "Seg4";
    case Branch::Above: return "Above";
  }
  return "?";
}

template <class Real = double>
struct PiecewiseEvalT {
  Real value{};
  Branch branch{Branch::Below};
};

using PiecewiseEval = PiecewiseEvalT<double>;

}  // namespace rtdist
