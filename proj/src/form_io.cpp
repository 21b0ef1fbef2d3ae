#include "glinv/form_io.hpp"

#include <cctype>
#include <sstream>

#include "glinv/errors.hpp"

namespace glinv {

namespace {

std::string var_text(const char* prefix, VarCode c) {
  VarIndex v = decode(c);
  return std::string(prefix) + "[" + std::to_string(v.i) + "," + std::to_string(v.j) + "]";
}

std::string monomial_text(const Monomial& m) {
  std::string out;
  for (const auto& [c, e] : m.xpart()) {
    out += var_text("x", c);
    if (e > 1) out += "^" + std::to_string(e);
  }
  bool first = true;
  for (VarCode c : m.dxpart()) {
    if (!first) out += "^";
    out += var_text("dx", c);
    first = false;
  }
  return out;
}

class TextParser {
 public:
  TextParser(std::string_view text, int n) : text_(text), n_(n) {}

  Form parse() {
    Form out(n_);
    skip_ws();
    if (at_end()) fail("empty form");
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    parse_term(out, sign);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
      parse_term(out, sign);
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  bool starts_with(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t end = pos_;
    while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end])) &&
           text_[end] != '+' && (end == pos_ || text_[end] != '-'))
      ++end;
    std::string token(text_.substr(pos_, end - pos_));
    if (token.empty()) token = at_end() ? "<end of input>" : std::string(1, peek());
    throw ParseError(what + " at offset " + std::to_string(pos_) + " near '" + token + "'");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int small_int() {
    std::string d = digits();
    if (d.empty() || d.size() > 6) fail("expected an index or exponent");
    return std::stoi(d);
  }

  VarIndex bracket_index() {
    if (at_end() || peek() != '[') fail("expected '['");
    ++pos_;
    skip_ws();
    int i = small_int();
    skip_ws();
    if (at_end() || peek() != ',') fail("expected ','");
    ++pos_;
    skip_ws();
    int j = small_int();
    skip_ws();
    if (at_end() || peek() != ']') fail("expected ']'");
    ++pos_;
    if (i < 1 || j < 1 || i > n_ || j > n_)
      throw ParseError("index [" + std::to_string(i) + "," + std::to_string(j) +
                       "] outside 1.." + std::to_string(n_));
    return {i, j};
  }

  void parse_term(Form& out, int sign) {
    skip_ws();
    Rational coeff(sign);
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      std::string den;
      if (!at_end() && peek() == '/') {
        ++pos_;
        den = digits();
        if (den.empty()) fail("expected denominator");
      }
      coeff *= parse_rational(den.empty() ? num : num + "/" + den);
      have_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
      }
    }
    std::vector<VarCode> xs;
    std::vector<VarCode> dxs;
    bool any_factor = false;
    for (;;) {
      skip_ws();
      if (starts_with("dx")) {
        pos_ += 2;
        dxs.push_back(encode(bracket_index()));
      } else if (starts_with("x")) {
        pos_ += 1;
        VarCode c = encode(bracket_index());
        int e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          std::size_t save = pos_;
          ++pos_;
          skip_ws();
          if (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            e = small_int();
          else
            pos_ = save;
        }
        xs.insert(xs.end(), static_cast<std::size_t>(e), c);
      } else {
        break;
      }
      any_factor = true;
      skip_ws();
      if (!at_end() && (peek() == '*' || peek() == '^')) {
        ++pos_;
        skip_ws();
        if (!starts_with("x") && !starts_with("dx")) fail("expected a factor");
      }
    }
    if (!have_coeff && !any_factor) fail("expected a term");
    auto built = Monomial::build(std::move(xs), std::move(dxs));
    if (!built) return;
    if (built->second < 0) coeff = -coeff;
    out.add_term(built->first, coeff);
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

Rational json_rational(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("coefficient must be a rational string or integer");
}

}  // namespace

std::string to_text(const Form& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    bool negative = sgn(c) < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    Rational magnitude = abs(c);
    std::string body = monomial_text(m);
    if (body.empty())
      out += to_string(magnitude);
    else if (magnitude == 1)
      out += body;
    else
      out += to_string(magnitude) + "*" + body;
  }
  return out;
}

Form parse_form_text(std::string_view text, int n) {
  try {
    return TextParser(text, n).parse();
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

nlohmann::json to_json(const Form& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : f.terms()) {
    nlohmann::json xs = nlohmann::json::array();
    for (const auto& [code, e] : m.xpart()) {
      VarIndex v = decode(code);
      xs.push_back({v.i, v.j, e});
    }
    nlohmann::json dxs = nlohmann::json::array();
    for (VarCode code : m.dxpart()) {
      VarIndex v = decode(code);
      dxs.push_back({v.i, v.j});
    }
    terms.push_back({{"c", to_string(c)}, {"x", xs}, {"dx", dxs}});
  }
  return {{"n", f.n()}, {"terms", terms}};
}

Form form_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
      throw ParseError("structured form needs fields 'n' and 'terms'");
    const int n = j.at("n").get<int>();
    if (n < 1) throw ParseError("structured form has n < 1");
    Form out(n);
    auto index = [n](const nlohmann::json& pair) {
      int i = pair.at(0).get<int>();
      int k = pair.at(1).get<int>();
      if (i < 1 || k < 1 || i > n || k > n)
        throw ParseError("index [" + std::to_string(i) + "," + std::to_string(k) +
                         "] outside 1.." + std::to_string(n));
      return encode({i, k});
    };
    for (const auto& t : j.at("terms")) {
      Rational c = json_rational(t.at("c"));
      std::vector<VarCode> xs;
      std::vector<VarCode> dxs;
      if (t.contains("x")) {
        for (const auto& f : t.at("x")) {
          int e = f.size() > 2 ? f.at(2).get<int>() : 1;
          if (e < 0) throw ParseError("negative exponent");
          xs.insert(xs.end(), static_cast<std::size_t>(e), index(f));
        }
      }
      if (t.contains("dx"))
        for (const auto& f : t.at("dx")) dxs.push_back(index(f));
      auto built = Monomial::build(std::move(xs), std::move(dxs));
      if (!built) continue;
      if (built->second < 0) c = -c;
      out.add_term(built->first, c);
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed structured form: ") + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Form parse_form_auto(std::string_view input, int n) {
  auto first = input.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && input[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(input);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("malformed structured form: ") + e.what());
    }
    return form_from_json(j);
  }
  return parse_form_text(input, n);
}

}  // namespace glinv
