#include "ncalg/series.hpp"

#include <functional>
#include <stdexcept>

namespace ncalg {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

IntPoly one_minus_t_power(std::size_t n) {
  IntPoly out{1};
  for (std::size_t i = 0; i < n; ++i) out = multiply(out, IntPoly{1, -1});
  return out;
}

std::vector<BigInt> expand_reciprocal(const IntPoly& d, std::size_t terms) {
  if (d.empty() || d[0] != 1)
    throw std::invalid_argument("series denominator must have constant term 1");
  std::vector<BigInt> c(terms, 0);
  for (std::size_t k = 0; k < terms; ++k) {
    BigInt acc = k == 0 ? BigInt(1) : BigInt(0);
    for (std::size_t i = 1; i <= k && i < d.size(); ++i) acc -= d[i] * c[k - i];
    c[k] = acc;
  }
  return c;
}

std::string format_int_poly(const IntPoly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    BigInt mag = abs(p[i]);
    if (out.empty()) {
      if (p[i] < 0) out += "-";
    } else {
      out += p[i] < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += i == 1 ? "t" : "t^" + std::to_string(i);
  }
  return out;
}

std::optional<std::vector<std::size_t>> product_form_decomposition(const IntPoly& d,
                                                                   std::size_t m) {
  if (d.empty() || d[0] != 1)
    throw std::invalid_argument("denominator must have constant term 1");
  const std::size_t degree = d.size() - 1;
  if (m == 0) {
    if (degree != 0) throw std::invalid_argument("m = 0 requires the denominator 1");
    return std::vector<std::size_t>{};
  }
  if (degree < m) return std::nullopt;

  std::vector<std::size_t> exponents;
  std::optional<std::vector<std::size_t>> found;
  std::function<void(std::size_t, std::size_t)> search = [&](std::size_t min_e,
                                                             std::size_t remaining) {
    if (found) return;
    std::size_t slots = m - exponents.size();
    if (slots == 0) {
      if (remaining != 0) return;
      IntPoly product{1};
      for (std::size_t e : exponents) {
        IntPoly factor(e + 1, 0);
        factor[0] = 1;
        factor[e] = -1;
        product = multiply(product, factor);
      }
      if (product == d) found = exponents;
      return;
    }
    for (std::size_t e = min_e; e * slots <= remaining; ++e) {
      exponents.push_back(e);
      search(e, remaining - e);
      exponents.pop_back();
    }
  };
  search(1, degree);
  return found;
}

}  // namespace ncalg
