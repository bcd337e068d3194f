#include "skt/notation.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace skt {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) throw ParseError(pos, std::string("expected ") + what);
  }
};

bool ident_start(char c) { return isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string read_ident(Cursor& cur) {
  cur.skip_ws();
  size_t start = cur.pos;
  while (cur.pos < cur.s.size() && ident_char(cur.s[cur.pos])) ++cur.pos;
  return cur.s.substr(start, cur.pos - start);
}

Rat read_rational(Cursor& cur) {
  cur.skip_ws();
  size_t start = cur.pos;
  while (cur.pos < cur.s.size() &&
         (isdigit(static_cast<unsigned char>(cur.s[cur.pos])) || cur.s[cur.pos] == '.'))
    ++cur.pos;
  if (cur.pos < cur.s.size() && cur.s[cur.pos] == '/') {
    ++cur.pos;
    while (cur.pos < cur.s.size() && isdigit(static_cast<unsigned char>(cur.s[cur.pos]))) ++cur.pos;
  }
  if (cur.pos == start) throw ParseError(cur.pos, "expected a number");
  return parse_rat(cur.s.substr(start, cur.pos - start));
}

struct Term {
  Rat coeff;
  int i, j;  // 1-based, i < j
  bool shorthand;
};

// term := [('-'|'+')] [rational|ident ['*']] fref
Term read_term(Cursor& cur, const Bindings& bindings, int sign) {
  Term t;
  t.coeff = sign;
  cur.skip_ws();
  char c = cur.peek();
  if (isdigit(static_cast<unsigned char>(c)) || c == '.') {
    t.coeff *= read_rational(cur);
    cur.accept('*');
    cur.skip_ws();
    c = cur.peek();
  } else if (ident_start(c) && c != 'f') {
    size_t at = cur.pos;
    std::string name = read_ident(cur);
    auto it = bindings.find(name);
    if (it == bindings.end()) throw ParseError(at, "unbound parameter '" + name + "'");
    t.coeff *= it->second;
    cur.accept('*');
    cur.skip_ws();
    c = cur.peek();
  } else if (c == 'f') {
    // an f followed by a digit or '[' is an index reference; anything else
    // starting with f is an identifier coefficient
    cur.skip_ws();
    char next = cur.pos + 1 < cur.s.size() ? cur.s[cur.pos + 1] : '\0';
    if (!isdigit(static_cast<unsigned char>(next)) && next != '[') {
      size_t at = cur.pos;
      std::string name = read_ident(cur);
      auto it = bindings.find(name);
      if (it == bindings.end()) throw ParseError(at, "unbound parameter '" + name + "'");
      t.coeff *= it->second;
      cur.accept('*');
      cur.skip_ws();
    }
    c = cur.peek();
  }
  if (cur.peek() != 'f') throw ParseError(cur.pos, "expected f<ij> or f[i,j]");
  ++cur.pos;
  if (cur.accept('[')) {
    t.shorthand = false;
    Rat ri = read_rational(cur);
    cur.expect(',', "','");
    Rat rj = read_rational(cur);
    cur.expect(']', "']'");
    if (ri.get_den() != 1 || rj.get_den() != 1) throw ParseError(cur.pos, "indices must be integers");
    t.i = static_cast<int>(ri.get_num().get_si());
    t.j = static_cast<int>(rj.get_num().get_si());
  } else {
    t.shorthand = true;
    cur.skip_ws();
    if (cur.pos + 1 >= cur.s.size() + 1) throw ParseError(cur.pos, "truncated index pair");
    auto digit = [&](size_t p) -> int {
      if (p >= cur.s.size() || !isdigit(static_cast<unsigned char>(cur.s[p])))
        throw ParseError(p, "expected two index digits after f");
      return cur.s[p] - '0';
    };
    t.i = digit(cur.pos);
    t.j = digit(cur.pos + 1);
    cur.pos += 2;
  }
  if (t.i == t.j) throw ParseError(cur.pos, "repeated index in f reference");
  if (t.i > t.j) {
    std::swap(t.i, t.j);
    t.coeff = -t.coeff;
  }
  return t;
}

}  // namespace

ParsedAlgebra parse_notation(const std::string& text, const Bindings& bindings) {
  Cursor cur{text};
  cur.expect('(', "'('");
  std::vector<std::vector<Term>> components;
  bool any_shorthand = false;
  while (true) {
    std::vector<Term> terms;
    cur.skip_ws();
    if (cur.peek() == '0') {
      ++cur.pos;
    } else {
      int sign = 1;
      if (cur.accept('-')) sign = -1;
      terms.push_back(read_term(cur, bindings, sign));
      while (true) {
        if (cur.accept('+')) {
          terms.push_back(read_term(cur, bindings, 1));
        } else if (cur.accept('-')) {
          terms.push_back(read_term(cur, bindings, -1));
        } else {
          break;
        }
      }
    }
    for (const auto& t : terms) any_shorthand = any_shorthand || t.shorthand;
    components.push_back(std::move(terms));
    if (cur.accept(',')) continue;
    cur.expect(')', "')' or ','");
    break;
  }
  if (!cur.eof()) throw ParseError(cur.pos, "trailing input after ')'");

  int dim = static_cast<int>(components.size());
  if (dim >= 10 && any_shorthand)
    throw ParseError(0, "two-digit f<ij> shorthand is ambiguous for dim >= 10; use f[i,j]");

  ParsedAlgebra out{LieAlgebra(dim)};
  for (int comp = 0; comp < dim; ++comp) {
    for (const auto& t : components[static_cast<size_t>(comp)]) {
      if (t.i < 1 || t.j > dim)
        throw ParseError(0, "index out of range in component " + std::to_string(comp + 1));
      // df^i(e_j, e_k) = -f^i([e_j, e_k])
      Rat existing = out.algebra.c(comp, t.i - 1, t.j - 1);
      out.algebra.set_bracket(t.i - 1, t.j - 1, comp, existing - t.coeff);
    }
  }
  if (!out.algebra.jacobi_check()) {
    out.jacobi_ok = false;
    out.warnings.push_back("structure constants violate the Jacobi identity");
  }
  return out;
}

std::string print_notation(const LieAlgebra& g) {
  int n = g.dim();
  std::ostringstream out;
  out << "(";
  for (int comp = 0; comp < n; ++comp) {
    if (comp) out << ", ";
    bool first = true;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Rat coeff = -g.c(comp, i, j);
        if (sgn(coeff) == 0) continue;
        Rat a(abs(coeff));
        if (first) {
          if (sgn(coeff) < 0) out << "-";
          first = false;
        } else {
          out << (sgn(coeff) < 0 ? " - " : " + ");
        }
        if (a != 1) out << rat_str(a) << "*";
        if (n <= 9)
          out << "f" << (i + 1) << (j + 1);
        else
          out << "f[" << (i + 1) << "," << (j + 1) << "]";
      }
    if (first) out << "0";
  }
  out << ")";
  return out.str();
}

namespace {

// expr := term (('+'|'-') term)*; term := factor (('*'|'/') factor)*;
// factor := rational | ident | '-' factor | '(' expr ')'
Rat parse_expr(Cursor& cur, const Bindings& b);

Rat parse_factor(Cursor& cur, const Bindings& b) {
  cur.skip_ws();
  if (cur.accept('-')) return -parse_factor(cur, b);
  if (cur.accept('(')) {
    Rat v = parse_expr(cur, b);
    cur.expect(')', "')'");
    return v;
  }
  char c = cur.peek();
  if (isdigit(static_cast<unsigned char>(c)) || c == '.') return read_rational(cur);
  if (ident_start(c)) {
    size_t at = cur.pos;
    std::string name = read_ident(cur);
    auto it = b.find(name);
    if (it == b.end()) throw ParseError(at, "unbound parameter '" + name + "'");
    return it->second;
  }
  throw ParseError(cur.pos, "expected a value");
}

Rat parse_term_expr(Cursor& cur, const Bindings& b) {
  Rat v = parse_factor(cur, b);
  while (true) {
    if (cur.accept('*')) {
      v *= parse_factor(cur, b);
    } else if (cur.accept('/')) {
      Rat d = parse_factor(cur, b);
      if (sgn(d) == 0) throw ParseError(cur.pos, "division by zero");
      v /= d;
    } else {
      return v;
    }
  }
}

Rat parse_expr(Cursor& cur, const Bindings& b) {
  Rat v = parse_term_expr(cur, b);
  while (true) {
    if (cur.accept('+')) {
      v += parse_term_expr(cur, b);
    } else if (cur.accept('-')) {
      v -= parse_term_expr(cur, b);
    } else {
      return v;
    }
  }
}

bool try_keyword(Cursor& cur, const char* kw) {
  cur.skip_ws();
  size_t save = cur.pos;
  for (const char* p = kw; *p; ++p) {
    if (cur.pos >= cur.s.size() || cur.s[cur.pos] != *p) {
      cur.pos = save;
      return false;
    }
    ++cur.pos;
  }
  if (cur.pos < cur.s.size() && ident_char(cur.s[cur.pos])) {
    cur.pos = save;
    return false;
  }
  return true;
}

bool parse_pred_atom(Cursor& cur, const Bindings& b) {
  cur.skip_ws();
  if (try_keyword(cur, "always")) return true;
  if (try_keyword(cur, "never")) return false;
  Rat lhs = parse_expr(cur, b);
  cur.skip_ws();
  if (try_keyword(cur, "in")) {
    cur.expect('{', "'{'");
    bool found = false;
    while (true) {
      Rat item = parse_expr(cur, b);
      if (item == lhs) found = true;
      if (cur.accept(',')) continue;
      cur.expect('}', "'}'");
      break;
    }
    return found;
  }
  std::string op;
  cur.skip_ws();
  if (cur.pos + 1 < cur.s.size() && (cur.s.substr(cur.pos, 2) == "!=" || cur.s.substr(cur.pos, 2) == "<=" ||
                                     cur.s.substr(cur.pos, 2) == ">=")) {
    op = cur.s.substr(cur.pos, 2);
    cur.pos += 2;
  } else if (cur.peek() == '=' || cur.peek() == '<' || cur.peek() == '>') {
    op = cur.s[cur.pos];
    ++cur.pos;
  } else {
    throw ParseError(cur.pos, "expected a comparison");
  }
  Rat rhs = parse_expr(cur, b);
  int c = cmp(lhs, rhs);
  if (op == "=") return c == 0;
  if (op == "!=") return c != 0;
  if (op == "<") return c < 0;
  if (op == ">") return c > 0;
  if (op == "<=") return c <= 0;
  return c >= 0;
}

bool parse_pred_and(Cursor& cur, const Bindings& b) {
  bool v = parse_pred_atom(cur, b);
  while (try_keyword(cur, "and")) {
    bool w = parse_pred_atom(cur, b);
    v = v && w;
  }
  return v;
}

bool parse_pred(Cursor& cur, const Bindings& b) {
  bool v = parse_pred_and(cur, b);
  while (try_keyword(cur, "or")) {
    bool w = parse_pred_and(cur, b);
    v = v || w;
  }
  return v;
}

}  // namespace

bool eval_predicate(const std::string& pred, const Bindings& bindings) {
  Cursor cur{pred};
  bool v = parse_pred(cur, bindings);
  if (!cur.eof()) throw ParseError(cur.pos, "trailing input in predicate");
  return v;
}

Rat eval_expression(const std::string& expr, const Bindings& bindings) {
  Cursor cur{expr};
  Rat v = parse_expr(cur, bindings);
  if (!cur.eof()) throw ParseError(cur.pos, "trailing input in expression");
  return v;
}

std::string rat_vec_str(const RatVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rat_str(v[i]);
  }
  return s + ")";
}

std::string alpha_space_str(const AlphaSpace& s) {
  if (!s.solvable()) return "empty";
  std::ostringstream out;
  Form p = s.particular_form(s.dim);
  out << p.str();
  char var = 's';
  for (const auto& row : s.basis) {
    Form b(s.dim, 1);
    for (int i = 0; i < s.dim; ++i) b.add_coeff(1u << i, row[static_cast<size_t>(i)]);
    out << " + " << var << "*(" << b.str() << ")";
    if (var == 'z')
      var = 's';
    else
      ++var;
  }
  return out.str();
}

namespace {

nlohmann::json form_to_json(const Form& f) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [mask, c] : f.coeffs()) j[mask_str(mask)] = rat_str(c);
  return j;
}

nlohmann::json alpha_to_json(const AlphaSpace& s) {
  nlohmann::json j;
  j["solvable"] = s.solvable();
  if (s.solvable()) {
    nlohmann::json p = nlohmann::json::array();
    for (const auto& x : *s.particular) p.push_back(rat_str(x));
    j["particular"] = p;
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& row : s.basis) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& x : row) r.push_back(rat_str(x));
      basis.push_back(r);
    }
    j["homogeneous_basis"] = basis;
    j["pretty"] = alpha_space_str(s);
  }
  return j;
}

}  // namespace

std::string emit_report(const std::string& name, const LieAlgebra& g, const StructureVerdict& v,
                        ReportFormat format) {
  auto mark = [](bool b) { return b ? "yes" : "no"; };
  if (format == ReportFormat::Markdown) {
    std::ostringstream out;
    out << "| name | structure equations | Kahler | SKT | twisted SKT | LCSKT | balanced | LCB | "
           "Bismut-Ricci flat |\n";
    out << "|---|---|---|---|---|---|---|---|---|\n";
    out << "| " << name << " | " << print_notation(g) << " | " << mark(v.kaehler) << " | "
        << mark(v.skt) << " | " << mark(v.twisted_skt) << " | " << mark(v.lcskt) << " | "
        << mark(v.balanced) << " | " << mark(v.lcb) << " | " << mark(v.bismut_ricci_flat)
        << " |\n\n";
    out << "- H = " << v.torsion.str() << "\n";
    out << "- dH = " << v.dtorsion.str() << "\n";
    out << "- theta = " << v.lee.str() << "\n";
    out << "- alpha space: " << alpha_space_str(v.alpha_space) << "\n";
    if (v.data) {
      out << "- a = " << rat_str(v.data->a) << ", v = " << rat_vec_str(v.data->v) << "\n";
    }
    return out.str();
  }
  nlohmann::json j;
  j["schema"] = "skt-lab/1";
  j["kind"] = "verdict";
  j["name"] = name;
  j["structure_equations"] = print_notation(g);
  j["flags"] = {{"kahler", v.kaehler},   {"skt", v.skt},
                {"twisted_skt", v.twisted_skt}, {"lcskt", v.lcskt},
                {"balanced", v.balanced}, {"lcb", v.lcb},
                {"bismut_ricci_flat", v.bismut_ricci_flat}};
  j["torsion"] = form_to_json(v.torsion);
  j["dtorsion"] = form_to_json(v.dtorsion);
  j["lee_form"] = form_to_json(v.lee);
  j["alpha_space"] = alpha_to_json(v.alpha_space);
  if (v.data) {
    j["data"] = {{"a", rat_str(v.data->a)}};
    nlohmann::json vv = nlohmann::json::array();
    for (const auto& x : v.data->v) vv.push_back(rat_str(x));
    j["data"]["v"] = vv;
    nlohmann::json am = nlohmann::json::array();
    for (int r = 0; r < v.data->A.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int c = 0; c < v.data->A.cols(); ++c) row.push_back(rat_str(v.data->A(r, c)));
      am.push_back(row);
    }
    j["data"]["A"] = am;
  }
  if (v.spectrum) {
    nlohmann::json evs = nlohmann::json::array();
    for (const auto& ev : v.spectrum->eigenvalues) {
      nlohmann::json e;
      e["re"] = ev.value.real();
      e["im"] = ev.value.imag();
      e["multiplicity"] = ev.multiplicity;
      if (ev.exact) e["exact"] = grat_str(*ev.exact);
      evs.push_back(e);
    }
    j["spectrum"] = {{"eigenvalues", evs}, {"diagonalizable", v.spectrum->diagonalizable}};
  }
  return j.dump(2) + "\n";
}

std::string matrix_to_json(const RatMat& m) {
  nlohmann::json j;
  j["schema"] = "skt-lab/1";
  j["kind"] = "matrix";
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rat_str(m(r, c)));
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j.dump(2) + "\n";
}

RatMat matrix_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  RatMat m(rows, cols);
  const auto& entries = j.at("entries");
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m(r, c) = parse_rat(entries.at(static_cast<size_t>(r)).at(static_cast<size_t>(c)).get<std::string>());
  return m;
}

}  // namespace skt
