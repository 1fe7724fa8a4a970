#include "fitshift/session.hpp"

#include "fitshift/apps.hpp"
#include "fitshift/error.hpp"
#include "fitshift/expr.hpp"
#include "fitshift/fitting.hpp"
#include "fitshift/reference_suite.hpp"
#include "fitshift/shifts.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fitshift {

using nlohmann::json;

std::string format_ideal(const Ideal& I) {
  const auto& gens = I.display_generators();
  if (gens.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + format_element(gens[i]);
  return s + ")";
}

std::string format_fraction(const FractionalIdeal& x) {
  std::string s = format_ideal(x.numerator());
  if (!x.denominator().is_one()) s += "/(" + format_element(x.denominator()) + ")";
  return s;
}

std::string format_matrix(const RingMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + format_element(m.at(i, j));
    s += "]";
  }
  return s + "]";
}

std::string format_value(const Value& v) {
  struct {
    std::string operator()(const RingElement& x) const { return format_element(x); }
    std::string operator()(const RingMatrix& x) const { return format_matrix(x); }
    std::string operator()(const Ideal& x) const { return format_ideal(x); }
    std::string operator()(const FractionalIdeal& x) const { return format_fraction(x); }
  } f;
  return std::visit(f, v);
}

DecompositionData decomposition_from_json(const json& j) {
  DecompositionData d;
  d.p = j.at("p").get<u64>();
  d.k = j.at("k").get<unsigned>();
  d.N = j.at("N").get<unsigned>();
  d.inertia_orders = j.at("inertia_orders").get<std::vector<unsigned>>();
  d.m_v = j.at("m_v").get<unsigned>();
  d.q = j.at("q").get<i64>();
  const json& fr = j.at("frobenius");
  d.delta_exponents = fr.at("delta_exponents").get<std::vector<unsigned>>();
  d.gamma_exponent = fr.at("gamma_exponent").get<u64>();
  return d;
}

namespace {

bool is_reserved(const std::string& id) {
  static const char* words[] = {"N", "ideal", "frac", "shift", "fitting"};
  if (std::find(std::begin(words), std::end(words), id) != std::end(words)) return true;
  for (const char* prefix : {"tau_", "tau", "d", "t", "m"}) {
    const std::string pre = prefix;
    if (id.size() > pre.size() && id.rfind(pre, 0) == 0 &&
        std::all_of(id.begin() + pre.size(), id.end(), ::isdigit))
      return true;
  }
  return false;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Splits on whitespace outside brackets; a token that is or touches a
// binary operator is glued to its neighbours, so "t1 + t1^2" stays whole.
std::vector<std::pair<std::string, std::size_t>> split_args(const std::string& s) {
  std::vector<std::pair<std::string, std::size_t>> raw;
  int depth = 0;
  std::size_t start = std::string::npos;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    const char c = i < s.size() ? s[i] : ' ';
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    const bool sep = depth <= 0 && std::isspace(static_cast<unsigned char>(c));
    if (sep) {
      if (start != std::string::npos) raw.emplace_back(s.substr(start, i - start), start);
      start = std::string::npos;
    } else if (start == std::string::npos) {
      start = i;
    }
  }
  auto is_op = [](char c) { return c == '+' || c == '-' || c == '*' || c == '^' || c == '/' || c == ','; };
  std::vector<std::pair<std::string, std::size_t>> out;
  for (auto& tok : raw) {
    const bool glue = !out.empty() && (is_op(out.back().first.back()) ||
                                       (tok.first != "-" && is_op(tok.first.front()) && tok.first.front() != '-') ||
                                       tok.first == "-");
    if (glue) {
      out.back().first += " " + tok.first;
    } else {
      out.push_back(tok);
    }
  }
  return out;
}

json precision_json(unsigned k, int N) { return json{{"k", k}, {"N", N}}; }

Ideal to_ideal(const Value& v) {
  if (auto* x = std::get_if<RingElement>(&v)) return Ideal::principal(*x);
  if (auto* x = std::get_if<Ideal>(&v)) return *x;
  if (auto* x = std::get_if<FractionalIdeal>(&v)) {
    if (x->denominator().is_one()) return x->numerator();
    throw OutOfRange("expected an ideal, got a fractional ideal with a nontrivial denominator");
  }
  throw OutOfRange("expected an ideal, got a matrix");
}

FractionalIdeal to_frac(const Value& v) {
  if (auto* x = std::get_if<FractionalIdeal>(&v)) return *x;
  return FractionalIdeal::integral(to_ideal(v));
}

RingMatrix to_matrix(const Value& v) {
  if (auto* x = std::get_if<RingMatrix>(&v)) return *x;
  if (auto* x = std::get_if<RingElement>(&v)) return RingMatrix(x->ring(), 1, 1, {*x});
  throw OutOfRange("expected a matrix");
}

class ValueReader {
 public:
  ValueReader(const Session& s, ExprParser& p, const SessionOptions& o) : s_(s), p_(p), o_(o) {}

  Value read() {
    const RingPtr& ring = s_.ring();
    const std::size_t start = p_.position();
    const std::string id = p_.peek_identifier();
    if (!id.empty()) {
      p_.read_identifier();
      if (p_.peek() == '(' && (id == "ideal" || id == "frac" || id == "shift" || id == "fitting")) return call(id);
      auto it = s_.bindings().find(id);
      if (it != s_.bindings().end() && !std::holds_alternative<RingElement>(it->second)) {
        if (std::holds_alternative<Ideal>(it->second) && p_.accept('/'))
          return FractionalIdeal(std::get<Ideal>(it->second), p_.parse_expr(), o_.assume_nzd);
        return it->second;
      }
      p_.set_position(start);
    }
    if (p_.peek() == '[') return matrix();
    if (p_.peek() == '(') {
      p_.expect('(');
      std::vector<RingElement> items;
      if (!p_.accept(')')) {
        do items.push_back(p_.parse_expr());
        while (p_.accept(','));
        p_.expect(')');
      }
      if (p_.accept('/')) return FractionalIdeal(Ideal(ring, std::move(items)), p_.parse_expr(), o_.assume_nzd);
      if (items.size() != 1) return Ideal(ring, std::move(items));
      p_.set_position(start);
    }
    return p_.parse_expr();
  }

 private:
  Value call(const std::string& id) {
    const RingPtr& ring = s_.ring();
    p_.expect('(');
    if (id == "ideal") {
      std::vector<RingElement> items;
      if (!p_.accept(')')) {
        do items.push_back(p_.parse_expr());
        while (p_.accept(','));
        p_.expect(')');
      }
      return Ideal(ring, std::move(items));
    }
    if (id == "frac") {
      Ideal num = to_ideal(read());
      p_.expect(',');
      RingElement den = p_.parse_expr();
      p_.expect(')');
      return FractionalIdeal(std::move(num), std::move(den), o_.assume_nzd);
    }
    if (id == "shift") {
      const bool neg = p_.accept('-');
      const long long n = p_.read_integer();
      p_.expect(')');
      return shift_trivial(ring, static_cast<int>(neg ? -n : n), o_.jobs);
    }
    RingMatrix m = to_matrix(read());
    p_.expect(')');
    return fitting_ideal(m, o_.jobs);
  }

  Value matrix() {
    const RingPtr& ring = s_.ring();
    p_.expect('[');
    std::vector<std::vector<RingElement>> rows;
    do {
      p_.expect('[');
      std::vector<RingElement> row;
      if (!p_.accept(']')) {
        do row.push_back(p_.parse_expr());
        while (p_.accept(','));
        p_.expect(']');
      }
      if (!rows.empty() && row.size() != rows.front().size()) p_.fail("matrix rows have different lengths");
      rows.push_back(std::move(row));
    } while (p_.accept(','));
    p_.expect(']');
    return RingMatrix::from_rows(ring, rows);
  }

  const Session& s_;
  ExprParser& p_;
  const SessionOptions& o_;
};

}  // namespace

Session::Session(SessionOptions opts, std::filesystem::path base_dir) : opts_(opts), base_(std::move(base_dir)) {}

const RingPtr& Session::ring() const {
  if (!ring_) throw OutOfRange("no ring defined yet (use: spec p=.. k=.. orders=.. d=.. N=..)");
  return ring_;
}

Value Session::parse_value(const std::string& text, std::size_t line_no, std::size_t column) const {
  const RingPtr& r = ring();
  ElementLookup lookup = [this](const std::string& name) -> std::optional<RingElement> {
    auto it = bindings_.find(name);
    if (it != bindings_.end())
      if (auto* x = std::get_if<RingElement>(&it->second)) return *x;
    return std::nullopt;
  };
  ExprParser p(text, r, lookup, line_no, column);
  ValueReader reader(*this, p, opts_);
  Value v = reader.read();
  if (!p.at_end()) p.fail("unexpected trailing input");
  return v;
}

CommandOutput Session::run_command(const std::string& raw, std::size_t line_no) {
  std::string line = raw;
  if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
  const std::size_t lead = line.find_first_not_of(" \t");
  CommandOutput out;
  if (lead == std::string::npos) return out;
  std::size_t sp = line.find_first_of(" \t", lead);
  const std::string cmd = line.substr(lead, sp == std::string::npos ? std::string::npos : sp - lead);
  const std::size_t rest_at = sp == std::string::npos ? line.size() : sp;
  const std::string rest = line.substr(rest_at);
  try {
    out = dispatch(cmd, rest, line_no, rest_at);
  } catch (const std::exception& e) {
    out.status = Status::usage;
    out.text = std::string("error: ") + e.what();
    out.json = json{{"verdict", "error"}, {"message", e.what()}};
  }
  out.json["command"] = trim(line);
  if (!out.json.contains("spec")) out.json["spec"] = ring_ ? json(ring_->spec().to_string()) : json(nullptr);
  for (const char* key : {"verdict", "certified_precision", "canonical_generators"})
    if (!out.json.contains(key)) out.json[key] = nullptr;
  provenance_.emplace_back(trim(line), out.json["certified_precision"].dump());
  return out;
}

CommandOutput Session::dispatch(const std::string& cmd, const std::string& rest, std::size_t line_no,
                                std::size_t col) {
  CommandOutput out;
  auto gens_json = [](const Ideal& I) {
    json a = json::array();
    for (const auto& g : I.display_generators()) a.push_back(format_element(g));
    return a;
  };
  auto stamp = [this] {
    const auto& s = ring()->spec();
    return "[k=" + std::to_string(s.k) + " N=" + std::to_string(s.N) + "]";
  };
  auto value_at = [&](const std::string& text, std::size_t offset) { return parse_value(text, line_no, col + offset); };
  auto args = split_args(rest);

  if (cmd == "spec") {
    GroupRingSpec s;
    s.k = 4;
    s.d = 1;
    s.N = 6;
    bool have_p = false;
    for (const auto& [tok, off] : args) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw ParseError("expected key=value, got '" + tok + "'", line_no, col + off + 1);
      const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
      auto num = [&](const std::string& v) -> unsigned long long {
        if (v.empty() || !std::all_of(v.begin(), v.end(), ::isdigit))
          throw ParseError("expected a nonnegative integer for " + key, line_no, col + off + 1);
        return std::stoull(v);
      };
      if (key == "p") {
        s.p = num(val);
        have_p = true;
      } else if (key == "k") {
        s.k = static_cast<unsigned>(num(val));
      } else if (key == "d") {
        s.d = static_cast<unsigned>(num(val));
      } else if (key == "N") {
        s.N = static_cast<unsigned>(num(val));
      } else if (key == "orders") {
        s.orders.clear();
        std::stringstream ss(val);
        for (std::string part; std::getline(ss, part, ',');)
          if (!part.empty()) s.orders.push_back(static_cast<unsigned>(num(part)));
      } else {
        throw ParseError("unknown spec key '" + key + "'", line_no, col + off + 1);
      }
    }
    if (!have_p) throw ParseError("spec needs p=<prime>", line_no, col + 1);
    if (opts_.precision) std::tie(s.k, s.N) = *opts_.precision;
    ring_ = Ring::make(s);
    bindings_.clear();
    out.text = "spec " + s.to_string() + " (basis size " + std::to_string(ring_->basis_size()) + ")";
    out.json = json{{"verdict", "ok"}};
    return out;
  }

  if (cmd == "let") {
    const auto eq = rest.find('=');
    if (eq == std::string::npos) throw ParseError("expected: let NAME = value", line_no, col + 1);
    const std::string name = trim(rest.substr(0, eq));
    if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_') ||
        !std::all_of(name.begin(), name.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }))
      throw ParseError("invalid name '" + name + "'", line_no, col + 1);
    if (is_reserved(name)) throw ParseError("'" + name + "' is a reserved name", line_no, col + 1);
    Value v = value_at(rest.substr(eq + 1), eq + 1);
    out.text = name + " = " + format_value(v);
    out.json = json{{"verdict", "ok"}};
    if (auto* I = std::get_if<Ideal>(&v)) out.json["canonical_generators"] = gens_json(*I);
    bindings_.insert_or_assign(name, std::move(v));
    return out;
  }

  if (cmd == "print") {
    Value v = value_at(rest, 0);
    out.text = format_value(v);
    out.json = json{{"verdict", "ok"}, {"value", out.text}};
    if (auto* I = std::get_if<Ideal>(&v)) out.json["canonical_generators"] = gens_json(*I);
    if (auto* F = std::get_if<FractionalIdeal>(&v)) {
      out.json["canonical_generators"] = gens_json(F->numerator());
      out.json["denominator"] = format_element(F->denominator());
    }
    return out;
  }

  if (cmd == "fitting") {
    const RingMatrix m = to_matrix(value_at(rest, 0));
    const Ideal I = fitting_ideal(m, opts_.jobs);
    out.text = "Fitt = " + format_ideal(I) + " " + stamp();
    out.json = json{{"verdict", "ok"},
                    {"certified_precision", precision_json(ring()->spec().k, static_cast<int>(ring()->N()))},
                    {"canonical_generators", gens_json(I)}};
    return out;
  }

  if (cmd == "canon") {
    const Ideal I = to_ideal(value_at(rest, 0));
    const auto rows_tau = I.tau_howell_rows();
    json rows = json::array();
    std::ostringstream os;
    os << "Howell form, " << rows_tau.size() << " rows, length " << I.length() << " " << stamp();
    for (const auto& row : rows_tau) {
      const std::string s = format_element(row);
      rows.push_back(s);
      os << "\n  " << s;
    }
    out.text = os.str();
    out.json = json{{"verdict", "ok"},
                    {"certified_precision", precision_json(ring()->spec().k, static_cast<int>(ring()->N()))},
                    {"canonical_generators", gens_json(I)},
                    {"howell_rows", rows}};
    return out;
  }

  if (cmd == "ideal-eq" || cmd == "frac-eq") {
    if (args.size() != 2) throw ParseError(cmd + " takes two arguments", line_no, col + 1);
    const Value a = value_at(args[0].first, args[0].second), b = value_at(args[1].first, args[1].second);
    bool equal = false;
    int tprec = static_cast<int>(ring()->N());
    if (cmd == "ideal-eq") {
      equal = ideal_equal(to_ideal(a), to_ideal(b));
    } else {
      const FracVerdict v = frac_equal(to_frac(a), to_frac(b));
      equal = v.equal;
      tprec = v.certified_t_precision;
    }
    const unsigned k = ring()->spec().k;
    out.status = equal ? Status::ok : Status::mismatch;
    out.text = equal ? "equal [k=" + std::to_string(k) + " N=" + std::to_string(tprec) + "]" : "unequal";
    out.json = json{{"verdict", equal ? "equal" : "unequal"},
                    {"certified_precision", equal ? precision_json(k, tprec) : json(nullptr)}};
    return out;
  }

  if (cmd == "shift-trivial") {
    if (args.size() != 1) throw ParseError("shift-trivial takes one integer", line_no, col + 1);
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(args[0].first, &used);
      if (used != args[0].first.size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw ParseError("expected an integer shift index", line_no, col + args[0].second + 1);
    }
    const FractionalIdeal v = shift_trivial(ring(), n, opts_.jobs);
    out.text = "shift(" + std::to_string(n) + ") = " + format_fraction(v) + " " + stamp();
    out.json = json{{"verdict", "ok"},
                    {"certified_precision", precision_json(ring()->spec().k, static_cast<int>(ring()->N()))},
                    {"canonical_generators", gens_json(v.numerator())},
                    {"denominator", format_element(v.denominator())}};
    return out;
  }

  if (cmd == "euler") {
    if (args.size() != 1) throw ParseError("euler takes one data file", line_no, col + 1);
    std::filesystem::path path = args[0].first;
    if (path.is_relative() && !std::filesystem::exists(path)) path = base_ / path;
    std::ifstream in(path);
    if (!in) throw OutOfRange("cannot open " + path.string());
    DecompositionData d = decomposition_from_json(json::parse(in));
    if (opts_.precision) std::tie(d.k, d.N) = *opts_.precision;
    const FractionalIdeal closed = euler_factor_closed(d, opts_.assume_nzd);
    const FractionalIdeal direct = euler_factor_direct(d, opts_.assume_nzd);
    const FracVerdict v = frac_equal(closed, direct);
    out.status = v.equal ? Status::ok : Status::mismatch;
    out.text = "local spec " + d.local_spec().to_string() + "\nclosed = " + format_fraction(closed) +
               "\ndirect = " + format_fraction(direct) + "\n" +
               (v.equal ? "equal [k=" + std::to_string(v.k) + " N=" + std::to_string(v.certified_t_precision) + "]"
                        : "unequal");
    out.json = json{{"verdict", v.equal ? "equal" : "unequal"},
                    {"certified_precision", v.equal ? precision_json(v.k, v.certified_t_precision) : json(nullptr)},
                    {"canonical_generators", gens_json(closed.numerator())},
                    {"denominator", format_element(closed.denominator())},
                    {"spec", d.local_spec().to_string()},
                    {"local_spec", d.local_spec().to_string()}};
    return out;
  }

  if (cmd == "verify-paper") {
    SuiteOptions so;
    so.precision = opts_.precision;
    so.jobs = opts_.jobs;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i].first != "--precision" || i + 1 >= args.size())
        throw ParseError("usage: verify-paper [--precision k,N]", line_no, col + 1);
      const std::string v = args[++i].first;
      const auto comma = v.find(',');
      if (comma == std::string::npos) throw ParseError("precision must be k,N", line_no, col + args[i].second + 1);
      so.precision = {static_cast<unsigned>(std::stoul(v.substr(0, comma))),
                      static_cast<unsigned>(std::stoul(v.substr(comma + 1)))};
    }
    const auto checks = run_reference_suite(so);
    const bool all = std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.pass; });
    out.status = all ? Status::ok : Status::mismatch;
    out.text = format_suite_report(checks);
    if (!out.text.empty() && out.text.back() == '\n') out.text.pop_back();
    json arr = json::array();
    for (const auto& c : checks)
      arr.push_back(json{{"name", c.name}, {"pass", c.pass}, {"precision", c.stamp}, {"detail", c.detail}});
    out.json = json{{"verdict", all ? "pass" : "fail"}, {"checks", arr}};
    return out;
  }

  throw ParseError("unknown command '" + cmd + "'", line_no, col - cmd.size() + 1);
}

Status Session::run_stream(std::istream& in, std::ostream& out, std::ostream& err) {
  Status worst = Status::ok;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    CommandOutput r = run_command(line, line_no);
    if (r.json.is_null()) continue;  // blank or comment
    if (opts_.json)
      out << r.json.dump() << "\n";
    else if (r.status == Status::usage)
      err << "line " << line_no << ": " << r.text << "\n";
    else
      out << r.text << "\n";
    if (static_cast<int>(r.status) > static_cast<int>(worst)) worst = r.status;
    if (r.status == Status::usage) break;
  }
  return worst;
}

}  // namespace fitshift
