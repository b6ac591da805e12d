#include "cliffpar/config.hpp"

#include <algorithm>
#include <cctype>

#include "cliffpar/intmath.hpp"

namespace cliffpar {

namespace {

const std::map<std::string, std::uint64_t>& default_counts() {
  static const std::map<std::string, std::uint64_t> counts = {
      {"ds", 500},           {"parallel-axioms", 150},
      {"conjugacy", 200},    {"orbit-quadric", 100},
      {"line-orbit-density", 8}, {"invariant-classes", 200},
      {"kernel", 50},        {"he-double-space", 100},
      {"prop-two", 40},      {"thm-main", 25},
      {"thm-new1", 25},      {"thm-new2", 25},
      {"case-b", 150},
  };
  return counts;
}

std::string trim_copy(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool parse_u64(const std::string& s, std::uint64_t& out) {
  if (s.empty()) return false;
  out = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    std::uint64_t d = static_cast<std::uint64_t>(c - '0');
    if (out > (~std::uint64_t{0} - d) / 10) return false;
    out = out * 10 + d;
  }
  return true;
}

bool parse_side(const std::string& s, Side& out) {
  if (s == "left") {
    out = Side::left;
    return true;
  }
  if (s == "right") {
    out = Side::right;
    return true;
  }
  return false;
}

}  // namespace

const std::vector<std::string>& all_suite_names() {
  static const std::vector<std::string> names = {
      "ds",          "parallel-axioms", "conjugacy",   "orbit-quadric",
      "line-orbit-density", "invariant-classes", "kernel",
      "he-double-space",    "prop-two",  "thm-main",   "thm-new1",
      "thm-new2",    "case-b"};
  return names;
}

std::uint64_t SuiteConfig::samples_for(const std::string& check) const {
  auto it = sample_counts.find(check);
  if (it != sample_counts.end()) return it->second;
  auto d = default_counts().find(check);
  return d == default_counts().end() ? 100 : d->second;
}

std::string SuiteConfig::algebra_description() const {
  return std::string(kind == AlgebraKind::case_a ? "caseA" : "caseB") +
         " a=" + a_text + " b=" + b_text;
}

SuiteConfig parse_config(const std::string& text) {
  SuiteConfig cfg;
  std::vector<std::string> errors;
  auto err = [&](int line, const std::string& what) {
    errors.push_back("line " + std::to_string(line) + ": " + what);
  };

  enum class Section { global, samples, tagging };
  Section section = Section::global;
  bool kind_set = false;
  bool checks_set = false;

  std::vector<std::pair<int, std::string>> lines;
  {
    std::string current;
    int n = 1;
    for (char c : text + "\n") {
      if (c == '\n') {
        lines.emplace_back(n++, current);
        current.clear();
      } else {
        current += c;
      }
    }
  }

  for (auto& [lineno, raw] : lines) {
    std::string line = raw;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim_copy(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        err(lineno, "malformed section header '" + line + "'");
        continue;
      }
      std::string name = trim_copy(line.substr(1, line.size() - 2));
      if (name == "samples") {
        section = Section::samples;
      } else if (name == "tagging") {
        section = Section::tagging;
        cfg.taggings.push_back(TagMap{});
      } else {
        err(lineno, "unknown section '" + name + "'");
        section = Section::global;
      }
      continue;
    }

    auto eq = line.find('=');
    if (eq == std::string::npos) {
      err(lineno, "expected 'key = value'");
      continue;
    }
    std::string key = trim_copy(line.substr(0, eq));
    std::string value = trim_copy(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      err(lineno, "expected 'key = value'");
      continue;
    }

    switch (section) {
      case Section::global: {
        if (key == "kind") {
          kind_set = true;
          if (value == "caseA") {
            cfg.kind = AlgebraKind::case_a;
          } else if (value == "caseB") {
            cfg.kind = AlgebraKind::case_b;
          } else {
            err(lineno, "unknown kind '" + value + "' (caseA or caseB)");
          }
        } else if (key == "a") {
          cfg.a_text = value;
        } else if (key == "b") {
          cfg.b_text = value;
        } else if (key == "seed") {
          if (!parse_u64(value, cfg.seed))
            err(lineno, "seed must be a 64-bit unsigned integer");
        } else if (key == "height_bound") {
          std::uint64_t h;
          if (!parse_u64(value, h) || h == 0 || h > 1000000) {
            err(lineno, "height_bound must be a positive integer");
          } else {
            cfg.height_bound = static_cast<long>(h);
          }
        } else if (key == "checks") {
          checks_set = true;
          cfg.checks.clear();
          std::string item;
          for (char c : value + ",") {
            if (c == ',') {
              item = trim_copy(item);
              if (!item.empty()) {
                if (std::find(all_suite_names().begin(),
                              all_suite_names().end(),
                              item) == all_suite_names().end()) {
                  err(lineno, "unknown check '" + item + "'");
                } else {
                  cfg.checks.push_back(item);
                }
              }
              item.clear();
            } else {
              item += c;
            }
          }
        } else {
          err(lineno, "unknown key '" + key + "'");
        }
        break;
      }
      case Section::samples: {
        if (std::find(all_suite_names().begin(), all_suite_names().end(),
                      key) == all_suite_names().end()) {
          err(lineno, "unknown check '" + key + "' in [samples]");
          break;
        }
        std::uint64_t n;
        if (!parse_u64(value, n) || n == 0) {
          err(lineno, "sample count must be a positive integer");
        } else {
          cfg.sample_counts[key] = n;
        }
        break;
      }
      case Section::tagging: {
        TagMap& tags = cfg.taggings.back();
        if (key == "default") {
          if (!parse_side(value, tags.default_tag))
            err(lineno, "tag must be 'left' or 'right'");
          break;
        }
        Side side;
        if (!parse_side(value, side)) {
          err(lineno, "tag must be 'left' or 'right'");
          break;
        }
        try {
          mpz_class k(key);
          if (k == 0 || k == 1) {
            err(lineno, "key " + key + " is not a valid orbit key");
          } else if (squarefree_part_int(k) != k) {
            err(lineno, "key " + key + " not squarefree");
          } else {
            tags.exceptional[k] = side;
          }
        } catch (const std::invalid_argument&) {
          err(lineno, "malformed orbit key '" + key + "'");
        }
        break;
      }
    }
  }
  (void)kind_set;

  // Certify the algebra.
  if (cfg.kind == AlgebraKind::case_a) {
    try {
      Rational a = Rational::parse(cfg.a_text);
      Rational b = Rational::parse(cfg.b_text);
      cfg.quaternion_algebra = make_quaternion_algebra(a, b);
    } catch (const Error& e) {
      errors.push_back(std::string("algebra: ") + e.what());
    }
    if (cfg.taggings.empty()) {
      // A proper tagging out of the box: the orbit of F1+Fi goes left.
      TagMap proper;
      proper.default_tag = Side::right;
      proper.exceptional[mpz_class(-1)] = Side::left;
      cfg.taggings.push_back(proper);
    }
  } else {
    try {
      F2RatFun a = F2RatFun::parse(cfg.a_text == "-1" ? "s" : cfg.a_text);
      F2RatFun b = F2RatFun::parse(cfg.b_text == "-1" ? "t" : cfg.b_text);
      cfg.a_text = a.str();
      cfg.b_text = b.str();
      cfg.quartic_algebra = make_quartic_field(a, b);
    } catch (const Error& e) {
      errors.push_back(std::string("algebra: ") + e.what());
    }
    for (const auto& tags : cfg.taggings) {
      if (!tags.exceptional.empty())
        errors.push_back(
            "tagging: caseB admits only the trivial tagging (no exceptional "
            "keys)");
    }
  }

  if (!checks_set || cfg.checks.empty()) cfg.checks = all_suite_names();

  if (!errors.empty()) {
    std::string msg = "configuration errors:";
    for (const auto& e : errors) msg += "\n  " + e;
    throw ConfigError(msg);
  }
  return cfg;
}

}  // namespace cliffpar
