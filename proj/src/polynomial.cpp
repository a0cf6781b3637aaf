#include "ncalg/polynomial.hpp"

#include <stdexcept>

namespace ncalg {

Polynomial Polynomial::monomial(Word w, Scalar c) {
  Polynomial p;
  p.add_term(w, c);
  return p;
}

Scalar Polynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::add_term(const Word& w, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) r.add_term(u * v, c * d);
  return r;
}

Polynomial Polynomial::sandwich(const Word& left, const Word& right) const {
  Polynomial r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(left * w * right, c);
  return r;
}

std::optional<std::uint64_t> top_degree(const Polynomial& f, const Alphabet& alphabet) {
  std::optional<std::uint64_t> top;
  for (const auto& [w, c] : f.terms()) {
    auto d = alphabet.degree(w);
    if (!top || d > *top) top = d;
  }
  return top;
}

bool is_homogeneous(const Polynomial& f, const Alphabet& alphabet) {
  return homogeneous_components(f, alphabet).size() <= 1;
}

Polynomial leading_homogeneous(const Polynomial& f, const Alphabet& alphabet) {
  if (f.is_zero()) throw std::invalid_argument("leading homogeneous part of zero");
  return homogeneous_components(f, alphabet).back().second;
}

std::vector<std::pair<std::uint64_t, Polynomial>> homogeneous_components(
    const Polynomial& f, const Alphabet& alphabet) {
  std::map<std::uint64_t, Polynomial> parts;
  for (const auto& [w, c] : f.terms()) parts[alphabet.degree(w)].add_term(w, c);
  return {parts.begin(), parts.end()};
}

}  // namespace ncalg
