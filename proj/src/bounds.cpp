#include "metriclab/bounds.hpp"

#include "metriclab/error.hpp"

namespace metriclab {
namespace {

BigInt power(BigInt base, long long exp) {
  if (exp < 0) throw PreconditionError("negative exponent");
  BigInt result = 1;
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

}  // namespace

BoundValue bound_trivial(long long d, long long k) {
  require(d >= 1 && k >= 1, "trivial bound needs d >= 1 and k >= 1");
  return {"trivial", {{"d", d}, {"k", k}}, power(d, k) + k};
}

BoundValue bound_hmmpsw(long long d, long long k) {
  require(d >= 1 && k >= 1, "hmmpsw bound needs d >= 1 and k >= 1");
  BigInt sum = 0;
  for (long long i = 1; i <= (d + 2) / 3; ++i) sum += power(2 * i - 1, k - 1);
  return {"hmmpsw", {{"d", d}, {"k", k}}, power(2 * d / 3 + 1, k) + k * sum};
}

BoundValue bound_tree(long long d, long long k) {
  require(d >= 2 && k >= 2, "tree bound needs d >= 2 and k >= 2");
  BigInt num = d % 2 == 0 ? BigInt(k * d + 4) * (d + 2) : BigInt(k * d - k + 8) * (d + 1);
  if (num % 8 != 0) throw Error("internal error: tree bound numerator not divisible by 8");
  return {"tree", {{"d", d}, {"k", k}}, num / 8};
}

BoundValue bound_treedec(long long d, long long k, long long w, long long l) {
  require(d >= 1 && k >= 1 && w >= 1 && l >= 0, "treedec bound needs d, k, w >= 1 and l >= 0");
  BigInt v = BigInt(2 * k - 1) * power(d + 1, 2) * (l + 1) * power(2 * l + 1, 3 * w);
  return {"treedec", {{"d", d}, {"k", k}, {"w", w}, {"l", l}}, v, BoundValue::Form::proof_constant};
}

BoundValue bound_treedec_tw(long long d, long long k, long long w) {
  auto b = bound_treedec(d, k, w, d);
  b.name = "treedec-tw";
  return b;
}

BoundValue bound_treedec_chordal(long long d, long long k) {
  require(k >= 1 && k <= 30, "chordal preset needs 1 <= k <= 30");
  long long w = 1;
  for (long long i = 0; i < k; ++i) w *= 3;
  auto b = bound_treedec(d, k, w, 1);
  b.name = "treedec-chordal";
  return b;
}

BoundValue bound_minorfree(long long d, long long k, long long t) {
  require(d >= 1 && k >= 1 && t >= 1, "minorfree bound needs d, k, t >= 1");
  return {"minorfree", {{"d", d}, {"k", k}, {"t", t}}, power(d * k + 1, t - 1) + 1};
}

BoundValue bound_rankwidth(long long d, long long k, long long r) {
  require(d >= 1 && k >= 1 && r >= 0 && r <= 40, "rankwidth bound needs d, k >= 1 and 0 <= r <= 40");
  long long exp = d * (3 * (1LL << r) + 2);
  return {"rankwidth", {{"d", d}, {"k", k}, {"r", r}}, power(d * k + 1, exp) + 1};
}

BoundValue bound_outerplanar(long long d, long long k) {
  require(d >= 1 && k >= 1, "outerplanar bound needs d >= 1 and k >= 1");
  BigInt dd = BigInt(d) * d;
  return {"outerplanar", {{"d", d}, {"k", k}}, 2 * k * dd - 2 * dd + d + 1};
}

BoundValue bound_tc_vc(long long tc, long long vcstar) {
  require(tc >= 0 && vcstar >= 0, "tc_vc bound needs nonnegative parameters");
  return {"tc_vc", {{"tc", tc}, {"vc", vcstar}}, power(tc, vcstar) + 1};
}

BoundValue bound_md_vcdim(long long d, long long k, long long dvcstar) {
  require(d >= 0 && k >= 0 && dvcstar >= 0, "md_vcdim bound needs nonnegative parameters");
  return {"md_vcdim", {{"d", d}, {"k", k}, {"vc", dvcstar}}, power(d * k + 1, dvcstar) + 1};
}

std::vector<std::string> bound_names() {
  return {"trivial",   "hmmpsw",    "tree",        "treedec", "treedec-tw", "treedec-chordal",
          "minorfree", "rankwidth", "outerplanar", "tc_vc",   "md_vcdim"};
}

BoundValue evaluate_bound(const std::string& name, const std::map<std::string, long long>& params) {
  auto get = [&](const char* key) {
    auto it = params.find(key);
    if (it == params.end()) throw PreconditionError("bound " + name + " needs parameter --" + key);
    return it->second;
  };
  if (name == "trivial") return bound_trivial(get("d"), get("k"));
  if (name == "hmmpsw") return bound_hmmpsw(get("d"), get("k"));
  if (name == "tree") return bound_tree(get("d"), get("k"));
  if (name == "treedec") return bound_treedec(get("d"), get("k"), get("w"), get("l"));
  if (name == "treedec-tw") return bound_treedec_tw(get("d"), get("k"), get("w"));
  if (name == "treedec-chordal") return bound_treedec_chordal(get("d"), get("k"));
  if (name == "minorfree") return bound_minorfree(get("d"), get("k"), get("t"));
  if (name == "rankwidth") return bound_rankwidth(get("d"), get("k"), get("r"));
  if (name == "outerplanar") return bound_outerplanar(get("d"), get("k"));
  if (name == "tc_vc") return bound_tc_vc(get("tc"), get("vc"));
  if (name == "md_vcdim") return bound_md_vcdim(get("d"), get("k"), get("vc"));
  throw PreconditionError("unknown bound '" + name + "'");
}

}  // namespace metriclab
