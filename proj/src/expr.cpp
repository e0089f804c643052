#include <cctype>

#include "amtv/constants.hpp"
#include "amtv/errors.hpp"
#include "amtv/series.hpp"

namespace amtv {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ConstExpr parse() {
    ConstExpr e = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  long integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    long v = std::stol(std::string(s_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  std::vector<long> int_args() {
    expect('(');
    std::vector<long> v{integer()};
    while (eat(',')) v.push_back(integer());
    expect(')');
    return v;
  }

  int one_arg() {
    auto v = int_args();
    if (v.size() != 1) fail("expected one argument");
    return static_cast<int>(v[0]);
  }

  ConstExpr expr() {
    ConstExpr e;
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    e = term();
    if (neg) e = -e;
    while (true) {
      if (eat('+'))
        e += term();
      else if (eat('-'))
        e -= term();
      else
        break;
    }
    return e;
  }

  ConstExpr term() {
    ConstExpr e = factor();
    while (true) {
      if (eat('*')) {
        e *= factor();
      } else if (eat('/')) {
        ConstExpr d = factor();
        if (!d.is_rational() || d.rational_value() == 0) fail("division only by nonzero rationals");
        e *= mpq_class(1) / d.rational_value();
      } else {
        break;
      }
    }
    return e;
  }

  ConstExpr factor() {
    ConstExpr base = primary();
    if (eat('^')) {
      long p = integer();
      if (p < 0) fail("negative power");
      return base.pow(static_cast<int>(p));
    }
    return base;
  }

  ConstExpr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ConstExpr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ConstExpr(mpq_class(integer()));
    size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    std::string id(s_.substr(start, pos_ - start));
    if (id.empty()) fail("unexpected character");
    if (id == "pi") return ConstExpr::pi();
    if (id == "log2") return ConstExpr::log2();
    if (id == "catalan") return ConstExpr(Atom{AtomKind::Catalan, 0, {}});
    if (id == "zeta") return ConstExpr::zeta(one_arg());
    if (id == "zbar") return ConstExpr::zetabar(one_arg());
    if (id == "tbar") return ConstExpr::tbar(one_arg());
    if (id == "ttilde") return ConstExpr::ttilde(one_arg());
    if (id == "G") return ConstExpr::gen_catalan(one_arg());
    if (id == "Li") return ConstExpr::li_half(one_arg());
    if (id == "alpha") return ConstExpr::alpha(one_arg());
    if (id == "T") {
      auto v = int_args();
      return ConstExpr::T(TIndex::from_signed(std::vector<int>(v.begin(), v.end())));
    }
    if (id == "W") {
      auto v = int_args();
      if (v.size() != 3) fail("W(k,r,l) takes three arguments");
      return ConstExpr::from(weighted_sum_symbolic(static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])));
    }
    fail("unknown name '" + id + "'");
  }
};

}  // namespace

ConstExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace amtv
