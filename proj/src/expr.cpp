#include "fitshift/expr.hpp"

#include "fitshift/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace fitshift {

ExprParser::ExprParser(std::string_view src, RingPtr ring, ElementLookup lookup, std::size_t line,
                       std::size_t column_offset)
    : src_(src), ring_(std::move(ring)), lookup_(std::move(lookup)), line_(line), col_offset_(column_offset) {}

void ExprParser::fail(const std::string& what) const { throw ParseError(what, line_, col_offset_ + pos_ + 1); }

void ExprParser::skip_space() {
  while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
}

bool ExprParser::at_end() {
  skip_space();
  return pos_ >= src_.size();
}

char ExprParser::peek() {
  skip_space();
  return pos_ < src_.size() ? src_[pos_] : '\0';
}

bool ExprParser::accept(char c) {
  if (peek() != c) return false;
  ++pos_;
  return true;
}

void ExprParser::expect(char c) {
  if (!accept(c)) {
    if (at_end()) fail(std::string("expected '") + c + "' but reached the end of input");
    fail(std::string("expected '") + c + "' but found '" + src_[pos_] + "'");
  }
}

std::string ExprParser::peek_identifier() {
  skip_space();
  std::size_t e = pos_;
  if (e < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[e])) || src_[e] == '_')) {
    while (e < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[e])) || src_[e] == '_')) ++e;
  }
  return std::string(src_.substr(pos_, e - pos_));
}

std::string ExprParser::read_identifier() {
  std::string id = peek_identifier();
  if (id.empty()) fail("expected a name");
  pos_ += id.size();
  return id;
}

long long ExprParser::read_integer() {
  skip_space();
  const std::size_t start = pos_;
  while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  if (start == pos_) fail("expected an integer");
  if (pos_ - start > 18) {
    pos_ = start;
    fail("integer literal too large");
  }
  return std::stoll(std::string(src_.substr(start, pos_ - start)));
}

RingElement ExprParser::parse_expr() {
  RingElement acc = parse_term();
  for (;;) {
    if (accept('+'))
      acc += parse_term();
    else if (accept('-'))
      acc -= parse_term();
    else
      return acc;
  }
}

RingElement ExprParser::parse_term() {
  RingElement acc = parse_unary();
  while (accept('*')) acc = acc * parse_unary();
  return acc;
}

RingElement ExprParser::parse_unary() {
  if (accept('-')) return -parse_unary();
  if (accept('+')) return parse_unary();
  return parse_power();
}

RingElement ExprParser::parse_power() {
  RingElement base = parse_primary();
  if (accept('^')) return base.pow(parse_exponent());
  return base;
}

u64 ExprParser::parse_exponent() {
  const char c = peek();
  if (std::isdigit(static_cast<unsigned char>(c))) return static_cast<u64>(read_integer());
  const std::size_t at = pos_;
  std::string id = peek_identifier();
  if (id.size() > 1 && id[0] == 'm' && std::all_of(id.begin() + 1, id.end(), ::isdigit)) {
    pos_ += id.size();
    return ring_->spec().orders[parse_index(id, 1, ring_->s(), "cyclic factor")];
  }
  pos_ = at;
  fail("exponent must be a nonnegative integer literal or m<i>");
}

std::size_t ExprParser::parse_index(const std::string& ident, std::size_t prefix, std::size_t limit,
                                    const char* what) const {
  const std::string digits = ident.substr(prefix);
  const std::size_t i = std::stoul(digits);
  if (i == 0 || i > limit) {
    throw ParseError(std::string(what) + " index " + digits + " out of range in '" + ident + "' (1.." +
                         std::to_string(limit) + ")",
                     line_, col_offset_ + pos_ - ident.size() + 1);
  }
  return i - 1;
}

RingElement ExprParser::parse_primary() {
  const char c = peek();
  if (c == '(') {
    ++pos_;
    RingElement x = parse_expr();
    expect(')');
    return x;
  }
  if (std::isdigit(static_cast<unsigned char>(c))) return ring_->constant(read_integer());
  if (c == '\0') fail("unexpected end of expression");

  const std::string id = peek_identifier();
  if (id.empty()) fail(std::string("unexpected character '") + c + "'");
  pos_ += id.size();

  if (lookup_) {
    if (auto v = lookup_(id)) return *v;
  }
  auto numbered = [&](std::size_t prefix) {
    return id.size() > prefix && std::all_of(id.begin() + prefix, id.end(), ::isdigit);
  };
  if (id == "N") {
    expect('(');
    std::vector<std::size_t> idx;
    if (!accept(')')) {
      do {
        const long long i = read_integer();
        if (i < 1 || static_cast<std::size_t>(i) > ring_->s()) fail("norm factor index out of range");
        idx.push_back(static_cast<std::size_t>(i - 1));
      } while (accept(','));
      expect(')');
      return ring_->norm_element(idx);
    }
    return ring_->norm_element();
  }
  if (id.rfind("tau_", 0) == 0 && numbered(4)) return ring_->tau(parse_index(id, 4, ring_->s(), "cyclic factor"));
  if (id.rfind("tau", 0) == 0 && numbered(3)) return ring_->tau(parse_index(id, 3, ring_->s(), "cyclic factor"));
  if (id[0] == 'd' && numbered(1)) return ring_->delta(parse_index(id, 1, ring_->s(), "cyclic factor"));
  if (id[0] == 't' && numbered(1)) return ring_->t(parse_index(id, 1, ring_->d(), "T variable"));
  if (id[0] == 'm' && numbered(1))
    return ring_->constant(ring_->spec().orders[parse_index(id, 1, ring_->s(), "cyclic factor")]);
  pos_ -= id.size();
  fail("unknown identifier '" + id + "'");
}

RingElement parse_element(std::string_view src, const RingPtr& ring, const ElementLookup& lookup) {
  ExprParser p(src, ring, lookup);
  RingElement x = p.parse_expr();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return x;
}

std::string format_element(const RingElement& x) {
  const Ring& R = x.r();
  const Zmod& z = R.zmod();
  const std::vector<u64> tc = tau_coordinates(x);
  std::vector<std::size_t> order;
  std::vector<unsigned> degree(tc.size());
  for (std::size_t idx = 0; idx < tc.size(); ++idx) {
    if (tc[idx] == 0) continue;
    unsigned deg = R.t_degree_of(idx % R.t_size());
    for (unsigned a : R.group_exponents(idx / R.t_size())) deg += a;
    degree[idx] = deg;
    order.push_back(idx);
  }
  if (order.empty()) return "0";
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return degree[a] < degree[b]; });

  std::ostringstream os;
  bool first = true;
  for (std::size_t idx : order) {
    i64 c = z.centered(tc[idx]);
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;

    std::vector<std::string> factors;
    const auto a = R.group_exponents(idx / R.t_size());
    const auto b = R.t_exponents(idx % R.t_size());
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i]) factors.push_back("tau" + std::to_string(i + 1) + (a[i] > 1 ? "^" + std::to_string(a[i]) : ""));
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j]) factors.push_back("t" + std::to_string(j + 1) + (b[j] > 1 ? "^" + std::to_string(b[j]) : ""));
    if (factors.empty() || c != 1) {
      os << c;
      if (!factors.empty()) os << "*";
    }
    for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
  }
  return os.str();
}

}  // namespace fitshift
