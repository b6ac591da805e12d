#include "cliffpar/textio.hpp"

#include <cctype>
#include <vector>

#include "cliffpar/errors.hpp"

namespace cliffpar {

namespace {

template <FieldScalar K>
constexpr const char* basis_letters() {
  return K::kCharTwo ? "uvw" : "ijk";
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// Splits on a separator at parenthesis depth zero.
std::vector<std::string_view> split_top_level(std::string_view text,
                                              char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw ConfigError("unbalanced parentheses");
    if (c == sep && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) throw ConfigError("unbalanced parentheses");
  parts.push_back(text.substr(start));
  return parts;
}

// Splits "a + b - c" into signed term texts at depth zero; a leading sign
// belongs to the first term.
std::vector<std::pair<int, std::string_view>> split_terms(
    std::string_view text) {
  std::vector<std::pair<int, std::string_view>> out;
  int depth = 0;
  int sign = 1;
  std::size_t start = 0;
  bool any_content = false;
  auto flush = [&](std::size_t end, int next_sign) {
    std::string_view piece = trim(text.substr(start, end - start));
    if (piece.empty()) {
      if (any_content || out.size() > 0)
        throw ConfigError("empty term in expression");
    } else {
      out.emplace_back(sign, piece);
    }
    sign = next_sign;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '+' || c == '-')) {
      std::string_view before = trim(text.substr(start, i - start));
      if (before.empty() && out.empty()) {
        // leading sign
        if (c == '-') sign = -sign;
        start = i + 1;
        continue;
      }
      flush(i, c == '-' ? -1 : 1);
      start = i + 1;
      any_content = true;
      continue;
    }
  }
  std::string_view last = trim(text.substr(start));
  if (last.empty()) throw ConfigError("dangling sign in expression");
  out.emplace_back(sign, last);
  return out;
}

template <FieldScalar K>
K parse_scalar_text(std::string_view text) {
  text = trim(text);
  // Strip one layer of enclosing parentheses when it spans the whole text.
  if (!text.empty() && text.front() == '(') {
    int depth = 0;
    bool spans = true;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') {
        --depth;
        if (depth == 0 && i + 1 < text.size()) {
          spans = false;
          break;
        }
      }
    }
    if (spans && text.size() >= 2)
      return parse_scalar_text<K>(text.substr(1, text.size() - 2));
  }
  if constexpr (K::kCharTwo) {
    return K::parse(text);
  } else {
    return K::parse(text);
  }
}

template <FieldScalar K>
std::string scalar_coeff_str(const K& c, bool attach_to_basis) {
  std::string s = c.str();
  if (!attach_to_basis) return s;
  bool needs_parens =
      s.find('+') != std::string::npos || s.find(' ') != std::string::npos;
  return needs_parens ? "(" + s + ")" : s;
}

}  // namespace

template <FieldScalar K>
std::string quat_str(const Quat<K>& q) {
  const char* letters = basis_letters<K>();
  std::string out;
  for (int m = 0; m < 4; ++m) {
    K c = q[m];
    if (c.is_zero()) continue;
    bool negative = false;
    if constexpr (!K::kCharTwo) {
      if (c.is_negative()) {
        negative = true;
        c = -c;
      }
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (m == 0) {
      out += c.str();
    } else if (c.is_one()) {
      out += letters[m - 1];
    } else {
      out += scalar_coeff_str(c, true) + "*" + letters[m - 1];
    }
  }
  if (out.empty()) out = "0";
  return out;
}

template <FieldScalar K>
Quat<K> parse_quat(std::string_view text) {
  const char* letters = basis_letters<K>();
  text = trim(text);
  if (text.empty()) throw ConfigError("empty quaternion literal");
  Quat<K> out;
  for (auto [sign, term] : split_terms(text)) {
    // Locate a basis letter at depth zero; there may be at most one and it
    // must be the final character of the term.
    int depth = 0;
    int basis = -1;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < term.size(); ++i) {
      char c = term[i];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth > 0) continue;
      for (int m = 0; m < 3; ++m) {
        if (c == letters[m]) {
          if (basis >= 0)
            throw ConfigError("two basis letters in one term: '" +
                              std::string(term) + "'");
          basis = m;
          pos = i;
        }
      }
    }
    K coeff = K::one();
    if (basis < 0) {
      coeff = parse_scalar_text<K>(term);
    } else {
      if (trim(term.substr(pos + 1)) != "")
        throw ConfigError("basis letter must end the term: '" +
                          std::string(term) + "'");
      std::string_view pre = trim(term.substr(0, pos));
      if (!pre.empty() && pre.back() == '*') {
        pre = trim(pre.substr(0, pre.size() - 1));
        if (pre.empty())
          throw ConfigError("missing coefficient before '*' in '" +
                            std::string(term) + "'");
      }
      if (!pre.empty()) coeff = parse_scalar_text<K>(pre);
    }
    if constexpr (!K::kCharTwo) {
      if (sign < 0) coeff = -coeff;
    }
    int idx = basis < 0 ? 0 : basis + 1;
    out[idx] = out[idx] + coeff;
  }
  return out;
}

template <FieldScalar K>
std::string subspace_str(const Subspace<K>& s) {
  if (s.dim() == 0) return "0";
  std::string out;
  for (int i = 0; i < s.dim(); ++i) {
    if (i > 0) out += "; ";
    out += quat_str(s.row(i));
  }
  return out;
}

template <FieldScalar K>
Subspace<K> parse_subspace(std::string_view text) {
  text = trim(text);
  if (text == "0") return Subspace<K>();
  std::vector<Quat<K>> rows;
  for (std::string_view part : split_top_level(text, ';')) {
    rows.push_back(parse_quat<K>(part));
  }
  return Subspace<K>::span(rows);
}

template std::string quat_str<Rational>(const Quat<Rational>&);
template std::string quat_str<F2RatFun>(const Quat<F2RatFun>&);
template Quat<Rational> parse_quat<Rational>(std::string_view);
template Quat<F2RatFun> parse_quat<F2RatFun>(std::string_view);
template std::string subspace_str<Rational>(const Subspace<Rational>&);
template std::string subspace_str<F2RatFun>(const Subspace<F2RatFun>&);
template Subspace<Rational> parse_subspace<Rational>(std::string_view);
template Subspace<F2RatFun> parse_subspace<F2RatFun>(std::string_view);

}  // namespace cliffpar
