#include "crosscap/index_expr.hpp"

#include <cctype>

#include "crosscap/error.hpp"

namespace crosscap {

std::string_view toString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::UnknownCurve: return "UnknownCurve";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::OneSidedCurve: return "OneSidedCurve";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::LedgerFormat: return "LedgerFormat";
    case ErrorKind::ConventionFormat: return "ConventionFormat";
  }
  return "Error";
}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const Bindings& vars) : text_(text), vars_(vars) {}

  long parse() {
    long value = parseSum();
    skipSpace();
    if (pos_ != text_.size()) fail("unexpected character");
    return value;
  }

 private:
  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(pos_, what + " in index expression '" + std::string(text_) + "'");
  }

  long parseSum() {
    long value = parseProduct();
    for (;;) {
      if (accept('+')) value += parseProduct();
      else if (accept('-')) value -= parseProduct();
      else return value;
    }
  }

  long parseProduct() {
    long value = parseUnary();
    for (;;) {
      if (accept('*')) {
        value *= parseUnary();
      } else if (accept('/') || accept('%')) {
        const bool isDiv = text_[pos_ - 1] == '/';
        const long rhs = parseUnary();
        if (rhs == 0) fail("division by zero");
        value = isDiv ? value / rhs : value % rhs;
      } else {
        return value;
      }
    }
  }

  long parseUnary() {
    if (accept('-')) return -parseUnary();
    if (accept('+')) return parseUnary();
    return parsePrimary();
  }

  long parsePrimary() {
    skipSpace();
    if (accept('(')) {
      long value = parseSum();
      if (!accept(')')) fail("expected ')'");
      return value;
    }
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + (text_[pos_] - '0');
        ++pos_;
      }
      return value;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const auto name = text_.substr(start, pos_ - start);
      auto it = vars_.find(name);
      if (it == vars_.end()) {
        pos_ = start;
        fail("unbound variable '" + std::string(name) + "'");
      }
      return it->second;
    }
    fail("unexpected character");
  }

  std::string_view text_;
  const Bindings& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

long evalIndexExpr(std::string_view text, const Bindings& vars) {
  return ExprParser(text, vars).parse();
}

}  // namespace crosscap
