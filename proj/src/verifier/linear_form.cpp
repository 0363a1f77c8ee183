#include "realforms/verifier/linear_form.hpp"

#include <sstream>

namespace realforms {

namespace {

std::string pair(int x, int y) { return std::to_string(x) + "," + std::to_string(y); }

int map_block(const std::vector<int>& perm, int t) {
  if (t <= 0 || static_cast<size_t>(t) >= perm.size()) return t;
  return perm[static_cast<size_t>(t)];
}

}  // namespace

std::string Unknown::name() const {
  switch (kind) {
    case 'd': return "d";
    case 'm': return "m_{" + pair(k, l) + "}";
    case 'n': return "n_{" + pair(k, l) + "}";
    default: return "e^{" + pair(k, l) + "}_{" + pair(a, b) + "}";
  }
}

Unknown Unknown::relabel(const std::vector<int>& perm) const {
  Unknown u = *this;
  if (kind != 'd') u.k = map_block(perm, k);
  if (kind == 'e') u.a = map_block(perm, a);
  return u;
}

LinearForm LinearForm::var(const Unknown& u, Integer coeff) {
  LinearForm f;
  if (sgn(coeff) != 0) f.terms_.emplace(u, std::move(coeff));
  return f;
}

Integer LinearForm::coeff(const Unknown& u) const {
  auto it = terms_.find(u);
  return it == terms_.end() ? Integer(0) : it->second;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  constant_ += o.constant_;
  for (const auto& [u, c] : o.terms_) {
    Integer& slot = terms_[u];
    slot += c;
    if (sgn(slot) == 0) terms_.erase(u);
  }
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) { return *this += -o; }

LinearForm LinearForm::operator-() const { return Integer(-1) * *this; }

LinearForm operator*(const Integer& k, const LinearForm& f) {
  LinearForm out;
  if (sgn(k) == 0) return out;
  out.constant_ = k * f.constant_;
  for (const auto& [u, c] : f.terms_) out.terms_.emplace(u, k * c);
  return out;
}

LinearForm LinearForm::relabel(const std::vector<int>& perm) const {
  LinearForm out(constant_);
  for (const auto& [u, c] : terms_) out += var(u.relabel(perm), c);
  return out;
}

std::string LinearForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Integer& c, const std::string& name) {
    Integer mag = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    if (name.empty() || mag != 1) os << mag.get_str();
    os << name;
    first = false;
  };
  for (const auto& [u, c] : terms_) emit(c, u.name());
  if (sgn(constant_) != 0 || first) {
    if (first && sgn(constant_) == 0)
      os << "0";
    else
      emit(constant_, "");
  }
  return os.str();
}

}  // namespace realforms
