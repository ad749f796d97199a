#include "gwp/expr.hpp"

#include <cctype>
#include <limits>

#include "gwp/errors.hpp"

namespace gwp {

namespace {

class ExprParser {
 public:
  ExprParser(const Graph& g, const Backend& b, std::string_view text)
      : graph_(g), backend_(evaluation_backend(b)), text_(text) {}

  ParsedElement parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty element expression");
    std::optional<PathWord> single = single_word();
    AlgebraElement value = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return {std::move(value), std::move(single)};
  }

 private:
  // Products are evaluated with unbounded depth; the caller enforces its own.
  static Backend evaluation_backend(const Backend& b) {
    return b.is_fock() ? Backend::fock(std::numeric_limits<std::size_t>::max()) : b;
  }

  std::optional<PathWord> single_word() {
    std::size_t saved = pos_;
    std::optional<PathWord> word;
    if (accept("a:")) {
      word = parse_path(graph_, word_token());
    } else if (accept("L*[") || accept("L[")) {
      word = parse_path(graph_, bracket_word());
    }
    skip_ws();
    if (pos_ != text_.size()) word.reset();
    pos_ = saved;
    return word;
  }

  AlgebraElement expr() {
    AlgebraElement sum = term();
    while (true) {
      skip_ws();
      if (accept("+")) {
        sum += term();
      } else if (accept("-")) {
        sum -= term();
      } else {
        return sum;
      }
    }
  }

  AlgebraElement term() {
    skip_ws();
    Scalar coefficient = accept("-") ? Scalar(-1) : Scalar(1);
    std::optional<AlgebraElement> acc;
    bool any = false;
    while (true) {
      skip_ws();
      if (any && accept("*")) skip_ws();
      if (!starts_factor()) break;
      any = true;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coefficient = coefficient * rational();
      } else if (peek() == 'i' && !is_word_char(peek(1))) {
        ++pos_;
        coefficient = coefficient * Scalar::i();
      } else {
        AlgebraElement f = factor();
        acc = acc ? *acc * f : std::move(f);
      }
    }
    if (!any) fail("expected a factor");
    if (!acc) acc = AlgebraElement::from_diagonal(backend_, DiagonalElement::unit(graph_));
    return *acc * coefficient;
  }

  bool starts_factor() const {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'L' || c == 'i' ||
           (c == 'a' && peek(1) == ':');
  }

  AlgebraElement factor() {
    if (accept("(")) {
      AlgebraElement inner = expr();
      skip_ws();
      if (!accept(")")) fail("expected ')'");
      return inner;
    }
    if (accept("a:")) return AlgebraElement::self_adjoint_pair(backend_, path(word_token()));
    if (accept("L*[")) return AlgebraElement::annihilation(backend_, path(bracket_word()));
    if (accept("L[")) return AlgebraElement::creation(backend_, path(bracket_word()));
    fail("expected L[w], L*[w], a:w, a number or '('");
  }

  PathWord path(std::string_view word) { return parse_path(graph_, word); }

  Scalar rational() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    try {
      return Scalar(parse_rational(text_.substr(start, pos_ - start)));
    } catch (const std::invalid_argument&) {
      pos_ = start;
      fail("invalid rational literal");
    }
  }

  std::string_view bracket_word() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ']') ++pos_;
    if (pos_ == text_.size()) fail("expected ']'");
    std::string_view word = text_.substr(start, pos_ - start);
    ++pos_;
    return word;
  }

  std::string_view word_token() {
    std::size_t start = pos_;
    while (is_word_char(peek()) || peek() == '.' || peek() == '@') ++pos_;
    if (start == pos_) fail("expected a path after 'a:'");
    return text_.substr(start, pos_ - start);
  }

  static bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, 1, pos_ + 1); }

  const Graph& graph_;
  Backend backend_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedElement parse_element(const Graph& g, const Backend& b, std::string_view text) {
  ParsedElement parsed = ExprParser(g, b, text).parse();
  parsed.element = parsed.element.with_backend(b);
  return parsed;
}

}  // namespace gwp
