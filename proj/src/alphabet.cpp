#include "ncalg/alphabet.hpp"

#include <cctype>
#include <set>

#include "ncalg/errors.hpp"

namespace ncalg {

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && head != '_') return false;
  for (char c : name) {
    auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && u != '_') return false;
  }
  return true;
}

Alphabet::Alphabet(std::vector<std::string> names, std::vector<std::uint32_t> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.empty()) throw ValidationError("alphabet must declare at least one variable");
  if (weights_.size() != names_.size())
    throw ValidationError("alphabet needs exactly one weight per variable");
  if (names_.size() > 0xFFFF) throw ValidationError("too many variables");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!is_identifier(names_[i]))
      throw ValidationError("invalid variable name '" + names_[i] + "'");
    if (!seen.insert(names_[i]).second)
      throw ValidationError("duplicate variable name '" + names_[i] + "'");
    if (weights_[i] < 1)
      throw ValidationError("variable '" + names_[i] + "' must have a positive weight");
  }
}

Alphabet Alphabet::standard(std::size_t n, std::vector<std::uint32_t> weights) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  if (weights.empty()) weights.assign(n, 1);
  return Alphabet(std::move(names), std::move(weights));
}

std::optional<Letter> Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Letter>(i);
  return std::nullopt;
}

std::uint64_t Alphabet::degree(const Word& w) const {
  std::uint64_t d = 0;
  for (Letter a : w) d += weights_.at(a);
  return d;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += names_.at(w[i]);
  }
  return out;
}

Alphabet Alphabet::with_letter(std::string name, std::uint32_t weight) const {
  auto names = names_;
  auto weights = weights_;
  names.push_back(std::move(name));
  weights.push_back(weight);
  return Alphabet(std::move(names), std::move(weights));
}

}  // namespace ncalg
