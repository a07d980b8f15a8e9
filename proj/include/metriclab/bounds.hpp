#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace metriclab {

using BigInt = boost::multiprecision::cpp_int;

struct BoundValue {
  enum class Form { exact, proof_constant };
  std::string name;
  std::map<std::string, long long> params;
  BigInt value;
  Form form = Form::exact;
};

// d^k + k
BoundValue bound_trivial(long long d, long long k);
// (floor(2d/3)+1)^k + k * sum_{i=1}^{ceil(d/3)} (2i-1)^(k-1)
BoundValue bound_hmmpsw(long long d, long long k);
// (kd+4)(d+2)/8 for even d, (kd-k+8)(d+1)/8 for odd d
BoundValue bound_tree(long long d, long long k);
// (2k-1)(d+1)^2(l+1)(2l+1)^(3w)
BoundValue bound_treedec(long long d, long long k, long long w, long long l);
// Presets: l = d, and l = 1 with w = 3^k.
BoundValue bound_treedec_tw(long long d, long long k, long long w);
BoundValue bound_treedec_chordal(long long d, long long k);
// (dk+1)^(t-1) + 1
BoundValue bound_minorfree(long long d, long long k, long long t);
// (dk+1)^(d(3*2^r+2)) + 1
BoundValue bound_rankwidth(long long d, long long k, long long r);
// 2kd^2 - 2d^2 + d + 1
BoundValue bound_outerplanar(long long d, long long k);
// TC^vc + 1
BoundValue bound_tc_vc(long long tc, long long vcstar);
// (dk+1)^dvc + 1
BoundValue bound_md_vcdim(long long d, long long k, long long dvcstar);

// Evaluates a bound by name from a parameter map (keys d, k, w, l, t, r, tc,
// vc). Throws PreconditionError for unknown names or missing parameters.
BoundValue evaluate_bound(const std::string& name, const std::map<std::string, long long>& params);
std::vector<std::string> bound_names();

}  // namespace metriclab
