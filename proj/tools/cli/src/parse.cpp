#include <kfin/cli/parse.hpp>

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace kfin::cli {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  BigInt unsigned_int() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  std::size_t exponent() {
    const BigInt e = unsigned_int();
    if (!e.fits_uint_p() || e > 100000) fail("exponent too large");
    return e.get_ui();
  }

  // int ['/' positive-int]
  BigRational rational() {
    BigRational r(unsigned_int());
    if (accept('/')) {
      const BigInt den = unsigned_int();
      if (den == 0) fail("zero denominator");
      r /= den;
      r.canonicalize();
    }
    return r;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, pos_ + 1);
  }

  std::size_t column() const { return pos_ + 1; }
  std::size_t line() const { return line_; }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

bool starts_number(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

struct FormTerm {
  std::size_t s_exp = 0;
  std::size_t t_exp = 0;
  BigRational coeff = 1;
};

FormTerm form_term(Cursor& in) {
  FormTerm term;
  bool seen = false;
  while (in.accept('-')) term.coeff = -term.coeff;
  if (starts_number(in.peek())) {
    term.coeff *= in.rational();
    seen = true;
    in.accept('*');
  }
  bool factor = false;
  for (;;) {
    const char c = in.peek();
    if (c != 's' && c != 't') break;
    in.accept(c);
    std::size_t e = 1;
    if (in.accept('^')) e = in.exponent();
    (c == 's' ? term.s_exp : term.t_exp) += e;
    factor = true;
    in.accept('*');
  }
  if (!seen && !factor) in.fail("expected a coefficient or a monomial in s and t");
  return term;
}

Poly poly_expr(Cursor& in);

Poly poly_base(Cursor& in) {
  const char c = in.peek();
  if (c == '(') {
    in.accept('(');
    Poly p = poly_expr(in);
    in.expect(')');
    return p;
  }
  if (c == 't') {
    in.accept('t');
    return Poly::monomial(1);
  }
  if (starts_number(c)) return Poly::constant(in.rational());
  in.fail(c == '\0' ? "unexpected end of expression" : std::string("unexpected '") + c + "'");
}

Poly poly_factor(Cursor& in) {
  Poly base = poly_base(in);
  if (in.accept('^')) return base.pow(static_cast<unsigned>(in.exponent()));
  return base;
}

Poly poly_unary(Cursor& in) {
  if (in.accept('-')) return -poly_unary(in);
  if (in.accept('+')) return poly_unary(in);
  return poly_factor(in);
}

Poly poly_term(Cursor& in) {
  Poly acc = poly_unary(in);
  for (;;) {
    const char c = in.peek();
    if (c == '*') {
      in.accept('*');
      acc = acc * poly_unary(in);
    } else if (c == '/') {
      in.accept('/');
      const std::size_t col = in.column();
      const Poly d = poly_unary(in);
      if (d.degree() != 0) throw ParseError("division by a non-constant or zero polynomial", in.line(), col);
      acc = acc * Poly::constant(1 / d.coeffs()[0]);
    } else if (c == '(' || c == 't' || starts_number(c)) {
      acc = acc * poly_factor(in);
    } else {
      return acc;
    }
  }
}

Poly poly_expr(Cursor& in) {
  Poly acc = poly_term(in);
  for (;;) {
    if (in.accept('+')) acc = acc + poly_term(in);
    else if (in.accept('-')) acc = acc - poly_term(in);
    else return acc;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t header_count(std::string_view rest, std::string_view keyword, std::size_t line) {
  Cursor in(rest, line);
  const BigInt n = in.unsigned_int();
  if (!in.at_end()) in.fail("trailing text after " + std::string(keyword) + " header");
  if (!n.fits_uint_p()) in.fail("header value too large");
  return n.get_ui();
}

}  // namespace

BinaryForm parse_form(std::string_view text, std::size_t line) {
  Cursor in(text, line);
  std::map<std::size_t, BigRational> by_t;
  std::optional<std::size_t> degree;
  bool first = true;
  while (first || !in.at_end()) {
    bool negate = false;
    if (!first) {
      if (in.accept('-')) negate = true;
      else if (!in.accept('+')) in.fail("expected '+' or '-'");
    }
    in.skip_space();
    const std::size_t col = in.column();
    FormTerm term = form_term(in);
    first = false;
    const std::size_t deg = term.s_exp + term.t_exp;
    if (degree && *degree != deg) throw ParseError("inhomogeneous expression", line, col);
    degree = deg;
    by_t[term.t_exp] += negate ? BigRational(-term.coeff) : term.coeff;
  }
  Vector c(*degree + 1);
  for (auto& [t, v] : by_t) c[t] = v;
  return BinaryForm(*degree, std::move(c));
}

Poly parse_poly_t(std::string_view text, std::size_t line) {
  Cursor in(text, line);
  if (in.at_end()) in.fail("empty polynomial");
  Poly p = poly_expr(in);
  if (!in.at_end()) in.fail(std::string("unexpected '") + in.peek() + "'");
  return p;
}

Weight parse_weight(std::string_view text, std::size_t line) {
  std::string s(trim(text));
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw ParseError("unbalanced parenthesis in weight", line, 1);
    s = s.substr(1, s.size() - 2);
  }
  for (auto& c : s) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(s);
  Weight w;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParseError("bad weight entry '" + tok + "'", line, 1);
    w.push_back(static_cast<std::int64_t>(v));
  }
  if (w.empty()) throw ParseError("empty weight", line, 1);
  return w;
}

PointP1 parse_point(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) throw ParseError("point must be written a,b", 1, 1);
  Cursor a(text.substr(0, comma), 1);
  Cursor b(text.substr(comma + 1), 1);
  auto signed_int = [](Cursor& in) {
    const bool neg = in.accept('-');
    if (!neg) in.accept('+');
    BigInt v = in.unsigned_int();
    if (!in.at_end()) in.fail("trailing text in point coordinate");
    return neg ? BigInt(-v) : v;
  };
  BigInt alpha = signed_int(a);
  BigInt beta = signed_int(b);
  return PointP1(std::move(alpha), std::move(beta));
}

Tau parse_tau(std::string_view text) {
  const auto t = trim(text);
  if (t == "inf" || t == "infinity") return std::nullopt;
  Cursor in(t, 1);
  const bool neg = in.accept('-');
  BigRational r = in.rational();
  if (!in.at_end()) in.fail("expected a rational or 'inf'");
  return neg ? BigRational(-r) : r;
}

InputDocument parse_document(std::string_view text) {
  std::optional<InputDocument> doc;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view line = trim(raw);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (!doc) {
      if (line.rfind("curve", 0) == 0) {
        doc = CurveDocument{header_count(line.substr(5), "curve", line_no), {}};
      } else if (line.rfind("multigraded", 0) == 0) {
        const std::size_t rank = header_count(line.substr(11), "multigraded", line_no);
        if (rank == 0) throw ParseError("rank must be positive", line_no, 1);
        doc = MultigradedDocument{rank, {}};
      } else {
        throw ParseError("expected header 'curve <degree>' or 'multigraded <rank>'", line_no, 1);
      }
    } else if (auto* curve = std::get_if<CurveDocument>(&*doc)) {
      BinaryForm f = parse_form(line, line_no);
      if (f.degree() != curve->ambient_degree) {
        throw ParseError("form has degree " + std::to_string(f.degree()) + ", header declares " +
                             std::to_string(curve->ambient_degree),
                         line_no, 1);
      }
      curve->basis.push_back(std::move(f));
    } else {
      auto& multi = std::get<MultigradedDocument>(*doc);
      const auto semi = line.find(';');
      if (semi == std::string_view::npos) throw ParseError("expected 'poly ; weight'", line_no, 1);
      Generator g{parse_poly_t(line.substr(0, semi), line_no), parse_weight(line.substr(semi + 1), line_no)};
      if (g.u.size() != multi.rank) {
        throw ParseError("weight has " + std::to_string(g.u.size()) + " entries, header declares rank " +
                             std::to_string(multi.rank),
                         line_no, semi + 2);
      }
      multi.generators.push_back(std::move(g));
    }
    if (end == text.size()) break;
  }
  if (!doc) throw ParseError("empty document", line_no == 0 ? 1 : line_no, 1);
  const bool empty = std::visit([](const auto& d) {
    if constexpr (std::is_same_v<std::decay_t<decltype(d)>, CurveDocument>) return d.basis.empty();
    else return d.generators.empty();
  }, *doc);
  if (empty) throw ParseError("document declares no generators", line_no, 1);
  return *doc;
}

InputDocument read_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

}  // namespace kfin::cli
