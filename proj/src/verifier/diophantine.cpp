#include "realforms/verifier/diophantine.hpp"

#include "realforms/errors.hpp"
#include "realforms/picgroup.hpp"

namespace realforms {

std::string to_string(Elimination which) {
  switch (which) {
    case Elimination::M: return "m";
    case Elimination::N1: return "n1";
    default: return "ns";
  }
}

Elimination parse_elimination(const std::string& s) {
  if (s == "m") return Elimination::M;
  if (s == "n1") return Elimination::N1;
  if (s == "ns") return Elimination::Ns;
  throw ParseError("unknown elimination '" + s + "'");
}

DiophantineResult diophantine_solve(Elimination which, int r, int a, int s) {
  if (r < 3) throw PreconditionViolated("the eliminations need r >= 3");
  if (a != 1 && a != -1) throw PreconditionViolated("a must be +1 or -1");
  if (which == Elimination::Ns && (s < 2 || s > r)) throw PreconditionViolated("ns needs 2 <= s <= r");

  DiophantineResult out;
  out.which = which;
  out.r = r;
  out.a = a;
  out.s = s;

  // v reads off one coordinate of Phi: v.G_k is that coordinate of Phi(g* e_k).
  // With Phi(g*[L]) = a*3p0 + 3B and Phi(g*[E_kl]) = a*p_kl + B this gives
  // v.G_0 = a v_0 + 3x and v.G_kl = a v_kl + x, x the coordinate of B.
  size_t coord = which == Elimination::M ? 0 : which == Elimination::N1 ? 1 : static_cast<size_t>(s);
  out.v.push_back(encode_3p0(r).to_array()[coord]);
  for (int i = 1; i <= r; ++i)
    for (int j = 0; j <= 4; ++j) out.v.push_back(encode_point(i, j, r).to_array()[coord]);

  // sum q_k v_k^2 = sum q_k (a v_k + c_k x)^2 with a^2 = 1 leaves
  // x (2a sum q_k c_k v_k + x sum q_k c_k^2) = 0.
  Integer qcv = 0, qcc = 0;
  for (size_t k = 0; k < out.v.size(); ++k) {
    int q = k == 0 ? 1 : -1;
    int c = k == 0 ? 3 : 1;
    qcv += q * c * out.v[k];
    qcc += q * c * c;
  }
  out.b = 2 * a * qcv;
  out.c = qcc;

  switch (which) {
    case Elimination::M:
      out.closed_b = 2 * (3 - r) * a;
      out.closed_c = 9 - 5 * r;
      break;
    case Elimination::N1:
      out.closed_b = -4 * (r - 2) * a;
      out.closed_c = 9 - 5 * r;
      break;
    case Elimination::Ns:
      out.closed_b = 4 * a;
      out.closed_c = 5 * r - 9;
      break;
  }
  bool same = out.b == out.closed_b && out.c == out.closed_c;
  bool negated = out.b == -out.closed_b && out.c == -out.closed_c;
  if (!same && !negated)
    throw InconsistentPipeline(to_string(which) + " elimination derived " + out.b.get_str() + " + " +
                               out.c.get_str() + "x, expected " + out.closed_b.get_str() + " + " +
                               out.closed_c.get_str() + "x");

  out.solutions.emplace_back(0);
  out.nonzero_root = Rational(-out.b, out.c);
  out.nonzero_root.canonicalize();
  std::string var = to_string(which);
  if (sgn(out.b) == 0) {
    out.bound = var + " = 0 is a double root";
  } else {
    Rational mag = abs(out.nonzero_root);
    if (mag.get_den() == 1) out.solutions.push_back(out.nonzero_root.get_num());
    out.bound = "0 < |" + var + "| = " + mag.get_str() + (mag < 1 ? " < 1" : "");
  }
  if (!out.only_zero())
    throw UnexpectedSolution(var + " equation for r=" + std::to_string(r) + ", a=" +
                             std::to_string(a) + " has the nonzero integer solution " +
                             out.nonzero_root.get_str());
  return out;
}

}  // namespace realforms
