#include "nsymkit/notation.hpp"

#include <json.hpp>

#include <cctype>
#include <optional>

namespace nsymkit {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  std::optional<Rational> rational() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) return std::nullopt;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == dstart) fail("expected denominator");
    }
    try {
      return parse_rational(s_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      pos_ = start;
      fail(e.what());
    }
  }
  std::vector<int> int_list() {
    expect('[');
    std::vector<int> parts;
    if (accept(']')) return parts;
    do {
      skip_ws();
      std::size_t start = pos_;
      int v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = v * 10 + (s_[pos_] - '0');
        if (v > kMaxCompositionSize) fail("part too large");
        ++pos_;
      }
      if (pos_ == start) fail("expected a positive integer");
      if (v == 0) {
        pos_ = start;
        fail("composition parts must be positive");
      }
      parts.push_back(v);
    } while (accept(','));
    expect(']');
    return parts;
  }
  std::size_t pos() const { return pos_; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

template <typename Basis, typename ParseTag>
GradedElement<Basis> parse_element(std::string_view text, ParseTag parse_tag) {
  Scanner sc(text);
  std::optional<GradedElement<Basis>> out;
  bool first = true;
  while (!sc.done()) {
    int sign = 1;
    if (sc.accept('-'))
      sign = -1;
    else if (!sc.accept('+') && !first)
      sc.fail("expected '+' or '-'");
    Rational coeff = sc.rational().value_or(Rational(1));
    sc.accept('*');
    const std::size_t tag_pos = sc.pos();
    const std::string tag = sc.word();
    if (tag.empty()) sc.fail("expected a basis tag");
    Basis basis;
    try {
      basis = parse_tag(tag);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), tag_pos);
    }
    const std::size_t index_pos = sc.pos();
    Composition alpha;
    try {
      alpha = Composition(sc.int_list());
    } catch (const ParseError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), index_pos);
    }
    if (!out) out.emplace(alpha.size(), basis);
    if (out->basis() != basis) throw ParseError("mixed bases in one expression", tag_pos);
    if (out->degree() != alpha.size()) throw ParseError("mixed degrees in one expression", index_pos);
    out->add(alpha, Rational(sign) * coeff);
    first = false;
  }
  if (!out) throw ParseError("empty expression", 0);
  return *out;
}

template <typename Basis>
std::string render(const GradedElement<Basis>& x) {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [alpha, c] : x.terms()) {
    const bool negative = sgn(c) < 0;
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    const Rational mag = abs(c);
    if (mag != 1) s += to_string(mag) + " ";
    s += std::string(basis_tag(x.basis())) + to_string(alpha);
    first = false;
  }
  return s;
}

template <typename Basis>
std::string render_json(const GradedElement<Basis>& x) {
  nlohmann::ordered_json j;
  j["degree"] = x.degree();
  j["basis"] = std::string(basis_tag(x.basis()));
  auto& terms = j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [alpha, c] : x.terms())
    terms.push_back({{"index", alpha.parts()}, {"coeff", to_string(c)}});
  return j.dump();
}

}  // namespace

NSymElem parse_nsym(std::string_view text) {
  return parse_element<NSymBasis>(text, [](const std::string& t) { return parse_nsym_basis(t); });
}

QSymElem parse_qsym(std::string_view text) {
  return parse_element<QSymBasis>(text, [](const std::string& t) { return parse_qsym_basis(t); });
}

std::string to_string(const NSymElem& x) { return render(x); }
std::string to_string(const QSymElem& x) { return render(x); }
std::string to_json(const NSymElem& x) { return render_json(x); }
std::string to_json(const QSymElem& x) { return render_json(x); }

std::string to_json(const NCPoly& p) {
  nlohmann::ordered_json j;
  j["m"] = p.m();
  auto& terms = j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [w, c] : p.terms()) terms.push_back({{"word", w.letters()}, {"coeff", to_string(c)}});
  return j.dump();
}

std::string to_json(const CPoly& p) {
  nlohmann::ordered_json j;
  j["m"] = p.m();
  auto& terms = j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [x, c] : p.terms()) terms.push_back({{"exponents", x.exponents(p.m())}, {"coeff", to_string(c)}});
  return j.dump();
}

}  // namespace nsymkit
