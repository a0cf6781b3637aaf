#include "ncalg/order.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncalg/errors.hpp"

namespace ncalg {

std::string_view to_string(OrderKind kind) {
  return kind == OrderKind::graded_lex ? "grlex" : "grevlex";
}

OrderKind parse_order_kind(std::string_view text) {
  if (text == "grlex") return OrderKind::graded_lex;
  if (text == "grevlex") return OrderKind::graded_reverse_lex;
  throw ValidationError("unsupported ordering '" + std::string(text) +
                        "': only degree-first orderings (grlex, grevlex) are allowed");
}

MonomialOrder::MonomialOrder(Alphabet alphabet, OrderKind kind, std::vector<Letter> precedence,
                             std::optional<Letter> homogenizer)
    : alphabet_(std::move(alphabet)),
      kind_(kind),
      precedence_(std::move(precedence)),
      rank_(alphabet_.size(), alphabet_.size()),
      homogenizer_(homogenizer) {
  if (precedence_.size() != alphabet_.size())
    throw ValidationError("precedence must list every variable exactly once");
  for (std::size_t i = 0; i < precedence_.size(); ++i) {
    Letter a = precedence_[i];
    if (a >= alphabet_.size() || rank_[a] != alphabet_.size())
      throw ValidationError("precedence must be a permutation of the variables");
    rank_[a] = i;
  }
  if (homogenizer_ && *homogenizer_ >= alphabet_.size())
    throw ValidationError("homogenizing letter out of range");
}

MonomialOrder MonomialOrder::graded_lex(Alphabet alphabet) {
  std::vector<Letter> precedence(alphabet.size());
  for (std::size_t i = 0; i < precedence.size(); ++i) precedence[i] = static_cast<Letter>(i);
  return MonomialOrder(std::move(alphabet), OrderKind::graded_lex, std::move(precedence));
}

std::strong_ordering MonomialOrder::compare_letters(const Word& u, const Word& v,
                                                    OrderKind kind) const {
  if (kind == OrderKind::graded_lex) {
    std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i)
      if (u[i] != v[i]) return rank_[u[i]] <=> rank_[v[i]];
    return u.size() <=> v.size();
  }
  std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 1; i <= n; ++i) {
    Letter a = u[u.size() - i];
    Letter b = v[v.size() - i];
    if (a != b) return rank_[b] <=> rank_[a];
  }
  return u.size() <=> v.size();
}

std::strong_ordering MonomialOrder::compare(const Word& u, const Word& v) const {
  if (auto c = degree(u) <=> degree(v); c != 0) return c;
  if (u == v) return std::strong_ordering::equal;
  if (homogenizer_ && kind_ == OrderKind::graded_reverse_lex) {
    auto strip = [&](const Word& w) {
      std::vector<Letter> kept;
      for (Letter a : w)
        if (a != *homogenizer_) kept.push_back(a);
      return Word(std::move(kept));
    };
    Word su = strip(u), sv = strip(v);
    if (auto c = degree(su) <=> degree(sv); c != 0) return c;
    if (auto c = compare_letters(su, sv, kind_); c != 0) return c;
    return compare_letters(u, v, OrderKind::graded_lex);
  }
  return compare_letters(u, v, kind_);
}

std::pair<Word, Scalar> leading_data(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("leading data of the zero polynomial");
  auto it = f.terms().begin();
  auto best = it;
  for (++it; it != f.terms().end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

std::string format_polynomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Word, Scalar>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms) {
    Scalar magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += order.alphabet().format(w);
    }
  }
  return out;
}

}  // namespace ncalg
