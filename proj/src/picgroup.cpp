#include "realforms/picgroup.hpp"

#include <sstream>

#include "realforms/errors.hpp"

namespace realforms {

namespace {

int bit(const Integer& v) { return mpz_odd_p(v.get_mpz_t()) ? 1 : 0; }

void check_same_r(const PicCElement& a, const PicCElement& b) {
  if (a.r() != b.r()) throw DimensionMismatch("PicCElement sizes differ");
}

void check_index(int i, int j, int r) {
  if (r < 1 || i < 1 || i > r || j < 0 || j > 4)
    throw PreconditionViolated("point index (" + std::to_string(i) + "," + std::to_string(j) +
                               ") out of range for r=" + std::to_string(r));
}

}  // namespace

PicCElement PicCElement::zero(int r) {
  PicCElement e;
  e.m = 0;
  e.n.assign(static_cast<size_t>(r), Integer(0));
  return e;
}

PicCElement& PicCElement::operator+=(const PicCElement& o) {
  check_same_r(*this, o);
  m += o.m;
  for (size_t i = 0; i < n.size(); ++i) n[i] += o.n[i];
  s1 ^= o.s1;
  s2 ^= o.s2;
  return *this;
}

PicCElement& PicCElement::operator-=(const PicCElement& o) {
  // -delta = delta
  return *this += -o;
}

PicCElement PicCElement::operator-() const {
  PicCElement e = *this;
  e.m = -e.m;
  for (auto& v : e.n) v = -v;
  return e;
}

PicCElement operator*(const Integer& k, const PicCElement& e) {
  PicCElement out = e;
  out.m *= k;
  for (auto& v : out.n) v *= k;
  int kb = bit(k);
  out.s1 &= kb;
  out.s2 &= kb;
  return out;
}

bool PicCElement::operator==(const PicCElement& o) const {
  return m == o.m && n == o.n && s1 == o.s1 && s2 == o.s2;
}

std::vector<Integer> PicCElement::to_array() const {
  std::vector<Integer> a;
  a.push_back(m);
  a.insert(a.end(), n.begin(), n.end());
  a.emplace_back(s1);
  a.emplace_back(s2);
  return a;
}

PicCElement PicCElement::from_array(const std::vector<Integer>& a) {
  if (a.size() < 4) throw DimensionMismatch("PicCElement array needs at least 4 entries");
  PicCElement e;
  e.m = a.front();
  e.n.assign(a.begin() + 1, a.end() - 2);
  e.s1 = bit(a[a.size() - 2]);
  e.s2 = bit(a.back());
  return e;
}

std::string PicCElement::to_string() const {
  std::ostringstream os;
  os << "(" << m.get_str();
  for (const auto& v : n) os << ", " << v.get_str();
  os << "; " << s1 << ", " << s2 << ")";
  return os.str();
}

PicCElement encode_point(int i, int j, int r) {
  check_index(i, j, r);
  PicCElement e = PicCElement::zero(r);
  if (j == 0) {
    // p_i0 = p10 + 2p14 - 2p_i4
    e.m = 1;
    if (i > 1) {
      e.n[0] = 2;
      e.n[i - 1] = -2;
    }
    return e;
  }
  e.n[i - 1] = 1;
  if (j == 1 || j == 3) e.s1 = 1;
  if (j == 2 || j == 3) e.s2 = 1;
  return e;
}

PicCElement encode_3p0(int r) {
  PicCElement e = PicCElement::zero(r);
  e.m = 1;
  e.n.at(0) = 2;
  return e;
}

Integer degree(const PicCElement& e) {
  Integer s = e.m;
  for (const auto& v : e.n) s += v;
  return s;
}

RelationVerdict solve_relation(const PicCElement& e, const Integer& d) {
  // (m - d) p10 + (n1 - 2d) p14 + sum_{i>=2} n_i p_i4 + s1 delta1 + s2 delta2 = 0.
  // Doubling removes the deltas; independence of p10, p14, ..., p_r4 then
  // forces every integer coefficient to vanish.
  RelationVerdict v;
  v.d = d;
  if (e.r() < 1) throw PreconditionViolated("solve_relation needs r >= 1");
  if (e.n[0] != 2 * e.m) {
    v.failed_step = "n1=2m";
    v.detail = "n1 = " + e.n[0].get_str() + " but 2m = " + Integer(2 * e.m).get_str();
    return v;
  }
  for (int i = 2; i <= e.r(); ++i) {
    if (sgn(e.n[i - 1]) != 0) {
      v.failed_step = "n" + std::to_string(i) + "=0";
      v.detail = "n" + std::to_string(i) + " = " + e.n[i - 1].get_str();
      return v;
    }
  }
  if (degree(e) != 3 * d) {
    v.failed_step = "degree";
    v.detail = "m + sum n = " + degree(e).get_str() + " but 3d = " + Integer(3 * d).get_str();
    return v;
  }
  if (e.s1 != 0 || e.s2 != 0) {
    v.failed_step = "parity";
    v.detail = std::string("s1 = ") + std::to_string(e.s1) + ", s2 = " + std::to_string(e.s2) +
               " must both be even";
    return v;
  }
  v.forced = true;
  v.detail = "m = d, n1 = 2d, n_i = 0, s even";
  return v;
}

CollinearityVerdict collinearity(const std::array<PointIndex, 3>& triple, int r) {
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (triple[a] == triple[b]) throw RepeatedPoint("collinearity test needs three distinct points");
  PicCElement sum = PicCElement::zero(r);
  for (const auto& [i, j] : triple) sum += encode_point(i, j, r);
  CollinearityVerdict out;
  out.relation = solve_relation(sum, Integer(1));
  out.collinear = out.relation.forced;
  return out;
}

bool collinear_triple_test(const std::array<PointIndex, 3>& triple, int r) {
  return collinearity(triple, r).collinear;
}

}  // namespace realforms
