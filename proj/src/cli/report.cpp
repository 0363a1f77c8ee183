#include "realforms/cli/report.hpp"

#include <Eigen/Eigenvalues>
#include <iomanip>
#include <sstream>

#include "realforms/cli/certificate.hpp"
#include "realforms/errors.hpp"

namespace realforms {

double spectral_radius(const IntMatrix& M) {
  Eigen::MatrixXd A(static_cast<Eigen::Index>(M.rows()), static_cast<Eigen::Index>(M.cols()));
  for (size_t i = 0; i < M.rows(); ++i)
    for (size_t j = 0; j < M.cols(); ++j)
      A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = M(i, j).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> es(A, false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

std::string render_report(const Json& cert) {
  std::ostringstream out;
  try {
    int r = field(field(cert, "run"), "r").get<int>();
    const Json& c = field(cert, "curve");
    out << "curve      y^2 = x^3 + (" << field(c, "c2").get<std::string>() << ") x^2 + ("
        << field(c, "c1").get<std::string>() << ") x + (" << field(c, "c0").get<std::string>() << ")\n";
    out << "           discriminant " << field(c, "discriminant").get<std::string>() << ", j = "
        << field(c, "j_invariant").get<std::string>() << ", components " << field(c, "components").get<int>()
        << "\n";

    const Json& pts = field(cert, "points");
    out << "points     " << pts.size() << " (" << r << " base + " << 4 * r << " associated)\n";
    for (size_t k = 0; k < pts.size(); ++k) {
      const Json& p = pts[k];
      auto idx = field(p, "index");
      const Json& pt = field(p, "point");
      out << "  p(" << idx[0].get<int>() << "," << idx[1].get<int>() << ")  ";
      if (pt.contains("infinity")) {
        out << "infinity";
      } else {
        auto ap = field(pt, "approx");
        out << "x ~ " << ap[0].get<std::string>() << ", y ~ " << ap[1].get<std::string>();
        const Json& x = field(pt, "x");
        if (x.contains("polynomial"))
          out << "  [x: root " << field(x, "root").get<int>() << " of degree " << field(x, "polynomial").size() - 1
              << " poly, points[" << k << "]]";
      }
      out << (field(p, "real").get<bool>() ? "" : "  (non-real)") << "\n";
    }

    const Json& w = field(cert, "independence");
    out << "witness    method " << field(w, "method").get<std::string>() << ", relation bound N = "
        << field(w, "bound").get<long>() << ", " << field(w, "precision_bits").get<long>() << " bits\n";
    out << "lattice    K_X^2 = " << field(field(cert, "lattice"), "K_squared").get<long>() << "  (9 - 5r = "
        << 9 - 5 * r << ")\n";

    out << "pairs\n";
    for (const auto& f : field(cert, "inequivalence"))
      out << "  sigma_" << field(f, "i").get<int>() << " vs sigma_" << field(f, "j").get<int>() << ": "
          << field(f, "verdict").get<std::string>() << "\n";

    std::vector<IntMatrix> sig;
    for (const auto& s : field(cert, "sigma")) sig.push_back(matrix_from_json(field(s, "matrix")));
    out << "spectral radius of sigma_i* sigma_j* (informational, double precision)\n";
    for (size_t i = 0; i < sig.size(); ++i)
      for (size_t j = i + 1; j < sig.size(); ++j)
        out << "  (" << i + 1 << "," << j + 1 << ")  " << std::setprecision(4) << std::fixed << spectral_radius(sig[i] * sig[j]) << "\n";
    out << "verdict    " << field(cert, "verdict").get<std::string>() << "\n";
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
  return out.str();
}

}  // namespace realforms
