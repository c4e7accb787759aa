#include "freediv/cli/request.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "freediv/error.hpp"
#include "freediv/ring/parse.hpp"

namespace freediv::cli {

namespace {

const std::map<std::string, Check, std::less<>>& check_names() {
  static const std::map<std::string, Check, std::less<>> names = {
      {"squarefree", Check::squarefree},   {"weights", Check::weights},
      {"euler", Check::euler},             {"theta", Check::theta},
      {"logder", Check::logder},           {"saito", Check::saito},
      {"koszul", Check::koszul},           {"rees", Check::rees},
      {"linear_type", Check::linear_type}, {"isolated_kernel", Check::isolated_kernel},
      {"koszul_complex", Check::koszul_complex}, {"spencer", Check::spencer},
      {"product", Check::product},
  };
  return names;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// A value is a quoted string, a [list], or bare text (split on commas when a list is wanted).
class ValueReader {
 public:
  ValueReader(std::string_view text, std::size_t line, std::size_t column) : s_(text), line_(line), col0_(column) {}

  std::string scalar() {
    skip();
    std::string v = at_quote() ? quoted() : bare_rest();
    skip();
    if (pos_ < s_.size()) fail("unexpected text after value");
    return v;
  }

  std::vector<std::string> list() {
    skip();
    std::vector<std::string> out;
    if (pos_ < s_.size() && s_[pos_] == '[') {
      ++pos_;
      skip();
      if (pos_ < s_.size() && s_[pos_] == ']') {
        ++pos_;
      } else {
        while (true) {
          skip();
          out.push_back(at_quote() ? quoted() : bare_until(",]"));
          skip();
          if (pos_ >= s_.size()) fail("unterminated list");
          if (s_[pos_] == ']') {
            ++pos_;
            break;
          }
          if (s_[pos_] != ',') fail("expected ',' or ']'");
          ++pos_;
        }
      }
      skip();
      if (pos_ < s_.size()) fail("unexpected text after list");
      return out;
    }
    while (pos_ < s_.size()) {
      skip();
      out.push_back(at_quote() ? quoted() : bare_until(","));
      skip();
      if (pos_ < s_.size()) {
        if (s_[pos_] != ',') fail("expected ','");
        ++pos_;
      }
    }
    return out;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_quote() const { return pos_ < s_.size() && s_[pos_] == '"'; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col0_ + pos_); }

  std::string quoted() {
    ++pos_;
    std::string out;
    while (pos_ < s_.size() && s_[pos_] != '"') {
      if (s_[pos_] == '\\' && pos_ + 1 < s_.size()) ++pos_;
      out += s_[pos_++];
    }
    if (pos_ >= s_.size()) fail("unterminated string");
    ++pos_;
    return out;
  }
  std::string bare_rest() {
    std::string v = trim(s_.substr(pos_));
    pos_ = s_.size();
    if (v.empty()) fail("empty value");
    return v;
  }
  std::string bare_until(std::string_view stops) {
    std::size_t start = pos_;
    while (pos_ < s_.size() && stops.find(s_[pos_]) == std::string_view::npos) ++pos_;
    std::string v = trim(s_.substr(start, pos_ - start));
    if (v.empty()) fail("empty list item");
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_, col0_;
};

}  // namespace

const std::vector<Check>& all_checks() {
  static const std::vector<Check> all = {
      Check::squarefree, Check::weights,     Check::euler,           Check::theta,          Check::logder,
      Check::saito,      Check::koszul,      Check::rees,            Check::linear_type,    Check::isolated_kernel,
      Check::koszul_complex, Check::spencer, Check::product,
  };
  return all;
}

std::string to_string(Check c) {
  for (const auto& [name, value] : check_names())
    if (value == c) return name;
  return "?";
}

Check check_from_string(std::string_view name) {
  auto it = check_names().find(name);
  if (it == check_names().end()) {
    std::string known;
    for (const auto& [n, _] : check_names()) known += (known.empty() ? "" : ", ") + n;
    throw ParseError("unknown check '" + std::string(name) + "' (known: " + known + ")", 1, 1);
  }
  return it->second;
}

std::vector<Check> parse_checks(std::string_view list) {
  std::vector<Check> picked;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    std::string name = trim(list.substr(start, end - start));
    if (name == "all") return all_checks();
    if (!name.empty()) picked.push_back(check_from_string(name));
    start = end + 1;
  }
  std::vector<Check> out;
  for (Check c : all_checks())
    if (std::find(picked.begin(), picked.end(), c) != picked.end()) out.push_back(c);
  return out;
}

AnalysisRequest parse_config(std::string_view text) {
  AnalysisRequest req;
  std::size_t line_no = 0, start = 0, f_line = 0, f_col = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    // Strip a comment that is not inside quotes.
    bool in_quote = false;
    std::size_t cut = line.size();
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') in_quote = !in_quote;
      if (line[i] == '#' && !in_quote) {
        cut = i;
        break;
      }
    }
    line = line.substr(0, cut);
    if (trim(line).empty()) continue;

    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line_no, 1);
    std::string key = trim(line.substr(0, eq));
    if (!is_identifier(key)) throw ParseError("bad key '" + key + "'", line_no, 1);
    ValueReader value(line.substr(eq + 1), line_no, eq + 2);

    if (key == "name") {
      req.name = value.scalar();
    } else if (key == "vars") {
      req.vars = value.list();
    } else if (key == "f") {
      req.f = value.scalar();
      std::size_t lead = eq + 1;
      while (lead < line.size() && std::isspace(static_cast<unsigned char>(line[lead]))) ++lead;
      f_line = line_no;
      f_col = lead + 1 + (lead < line.size() && line[lead] == '"' ? 1 : 0);
    } else if (key == "basis") {
      req.basis = value.list();
    } else if (key == "ops") {
      req.operators = value.list();
    } else if (key == "checks") {
      std::string joined;
      for (const auto& c : value.list()) joined += c + ",";
      try {
        req.checks = parse_checks(joined);
      } catch (const ParseError& e) {
        std::string msg = e.what();
        throw ParseError(msg.substr(0, msg.rfind(" at line")), line_no, eq + 2);
      }
    } else if (key == "order") {
      req.order = value.scalar();
    } else if (key == "product_f") {
      req.product_f = value.scalar();
    } else if (key == "product_vars") {
      req.product_vars = value.list();
    } else if (key == "weights") {
      std::vector<long> w;
      for (const auto& item : value.list()) {
        try {
          std::size_t used = 0;
          w.push_back(std::stol(item, &used));
          if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
          throw ParseError("weight '" + item + "' is not an integer", line_no, eq + 2);
        }
      }
      req.weights = w;
    } else {
      throw ParseError("unknown key '" + key + "'", line_no, 1);
    }
  }
  // Report syntax errors in f at their position in the file.
  if (f_line && !req.vars.empty()) {
    try {
      parse_polynomial(req.f, VarSet::base(req.vars));
    } catch (const ParseError& e) {
      std::string msg = e.what();
      throw ParseError(msg.substr(0, msg.rfind(" at line")), f_line, f_col + e.column() - 1);
    }
  }
  return req;
}

void validate(const AnalysisRequest& req) {
  if (req.vars.empty()) throw ParseError("no variables given", 1, 1);
  for (const auto& v : req.vars)
    if (!is_identifier(v)) throw ParseError("bad variable name '" + v + "'", 1, 1);
  if (req.f.empty()) throw ParseError("no polynomial f given", 1, 1);
  if (req.order != "degrevlex" && req.order != "lex") throw ParseError("unknown order '" + req.order + "'", 1, 1);
  if (req.weights && req.weights->size() != req.vars.size())
    throw ParseError("weights must have one entry per variable", 1, 1);
  if (req.product_f && req.product_vars.empty()) throw ParseError("product_f needs product_vars", 1, 1);
}

}  // namespace freediv::cli
