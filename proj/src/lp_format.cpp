#include "chimeraq/lp_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace chimeraq {

namespace {

constexpr int terms_per_line = 8;
constexpr int names_per_line = 10;

// Appends " + 3 x0" / " - x4" style pieces, wrapping long expressions.
class TermWriter {
 public:
  explicit TermWriter(std::string& out) : out_(out) {}

  void add(long long coeff, const std::string& body) {
    if (coeff == 0) return;
    if (count_ > 0 && count_ % terms_per_line == 0) out_ += "\n   ";
    const bool neg = coeff < 0;
    const unsigned long long mag = neg ? 0ULL - static_cast<unsigned long long>(coeff)
                                       : static_cast<unsigned long long>(coeff);
    if (count_ == 0)
      out_ += neg ? " - " : " ";
    else
      out_ += neg ? " - " : " + ";
    if (mag != 1 || body.empty()) {
      out_ += std::to_string(mag);
      if (!body.empty()) out_ += " ";
    }
    out_ += body;
    ++count_;
  }

  int count() const { return count_; }

 private:
  std::string& out_;
  int count_ = 0;
};

void write_offset_comment(std::string& out, long long offset) {
  out += "\\ objective offset: " + std::to_string(offset) + "\n";
}

void write_binaries(std::string& out, const std::vector<NodeId>& x_vars) {
  if (x_vars.empty()) return;
  out += "Binaries\n";
  for (std::size_t i = 0; i < x_vars.size(); ++i) {
    out += (i % names_per_line == 0) ? (i == 0 ? " " : "\n ") : " ";
    out += x_var(x_vars[i]).name();
  }
  out += "\n";
}

}  // namespace

std::string emit_lp(const MilpModel& m) {
  std::string out;
  write_offset_comment(out, m.offset);
  out += "Minimize\n obj:";
  {
    TermWriter w(out);
    for (std::size_t e = 0; e < m.z_vars.size(); ++e)
      w.add(m.z_obj[e], z_var(m.z_vars[e].first, m.z_vars[e].second).name());
    for (std::size_t i = 0; i < m.x_vars.size(); ++i)
      w.add(m.x_obj[i], x_var(m.x_vars[i]).name());
  }
  out += "\nSubject To\n";
  for (const auto& row : m.rows) {
    out += " " + row.name + ":";
    TermWriter w(out);
    for (const auto& t : row.terms) w.add(t.coeff, t.var.name());
    out += row.sense == Sense::le ? " <= " : " >= ";
    out += std::to_string(row.rhs);
    out += "\n";
  }
  if (!m.z_vars.empty()) {
    out += "Bounds\n";
    for (const auto& e : m.z_vars)
      out += " 0 <= " + z_var(e.first, e.second).name() + " <= 1\n";
  }
  write_binaries(out, m.x_vars);
  out += "End\n";
  return out;
}

std::string emit_lp(const MiqpModel& m) {
  std::string out;
  write_offset_comment(out, m.offset);
  out += "Minimize\n obj:";
  TermWriter lin(out);
  for (std::size_t i = 0; i < m.x_vars.size(); ++i)
    lin.add(m.linear[i], x_var(m.x_vars[i]).name());

  // quadratic part, doubled coefficients inside [ ... ] / 2
  std::string quad;
  TermWriter qw(quad);
  for (std::size_t e = 0; e < m.quad_edges.size(); ++e)
    qw.add(2 * m.quad_edge_coeff[e], x_var(m.quad_edges[e].first).name() + " * " +
                                         x_var(m.quad_edges[e].second).name());
  for (std::size_t i = 0; i < m.x_vars.size(); ++i)
    qw.add(2 * m.quad_diag[i], x_var(m.x_vars[i]).name() + " ^ 2");
  if (qw.count() > 0) {
    out += lin.count() > 0 ? " + [" : " [";
    out += quad;
    out += " ] / 2";
  }
  out += "\nSubject To\n";
  write_binaries(out, m.x_vars);
  out += "End\n";
  return out;
}

// ---------------------------------------------------------------------------
// Parser for the linear dialect subset emitted above.
// ---------------------------------------------------------------------------

namespace {

struct Parser {
  std::vector<std::string> lines;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }

  static std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  }

  static bool is_section(const std::string& t) {
    return t == "Minimize" || t == "Subject To" || t == "Bounds" || t == "Binaries" ||
           t == "End";
  }

  // Next meaningful line without consuming it; comments are skipped.
  // The offset directive is recorded as it passes by.
  bool peek(std::string& out) {
    while (pos < lines.size()) {
      std::string t = trimmed(lines[pos]);
      if (t.empty() || t[0] == '\\') {
        handle_comment(t);
        ++pos;
        continue;
      }
      out = t;
      return true;
    }
    return false;
  }

  bool next(std::string& out) {
    if (!peek(out)) return false;
    ++pos;
    return true;
  }

  void handle_comment(const std::string& t) {
    const std::string tag = "\\ objective offset:";
    if (t.rfind(tag, 0) == 0) {
      if (saw_offset)
        throw Error(ErrorCode::malformed_section, "duplicate objective offset comment");
      saw_offset = true;
      offset = parse_int(trimmed(t.substr(tag.size())));
    }
  }

  long long parse_int(const std::string& tok) const {
    long long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw Error(ErrorCode::malformed_section,
                  "expected integer, got '" + tok + "' near line " + std::to_string(pos + 1));
    return v;
  }

  bool saw_offset = false;
  long long offset = 0;
};

std::vector<std::string> tokenize(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool parse_var_name(const std::string& name, VarId& out) {
  auto read_num = [](std::string_view sv, NodeId& v) {
    auto [p, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
    return ec == std::errc() && p == sv.data() + sv.size();
  };
  if (name.size() >= 2 && name[0] == 'x' && std::isdigit(static_cast<unsigned char>(name[1]))) {
    NodeId i;
    if (!read_num(std::string_view(name).substr(1), i)) return false;
    out = x_var(i);
    return true;
  }
  if (name.rfind("z_", 0) == 0) {
    const auto mid = name.find('_', 2);
    if (mid == std::string::npos) return false;
    NodeId i, j;
    if (!read_num(std::string_view(name).substr(2, mid - 2), i)) return false;
    if (!read_num(std::string_view(name).substr(mid + 1), j)) return false;
    if (i >= j) return false;
    out = VarId{VarId::Kind::z, i, j};
    return true;
  }
  return false;
}

// Parses "3 x0 + z_0_4 - 2 x4" style token runs into terms.
std::vector<LinTerm> parse_terms(const std::vector<std::string>& toks, std::size_t begin,
                                 std::size_t end) {
  std::vector<LinTerm> terms;
  long long sign = 1;
  std::optional<long long> coeff;
  for (std::size_t i = begin; i < end; ++i) {
    const std::string& tok = toks[i];
    if (tok == "+" || tok == "-") {
      if (coeff)
        throw Error(ErrorCode::malformed_section, "dangling coefficient before '" + tok + "'");
      sign = tok == "-" ? -1 : 1;
      continue;
    }
    if (tok == "[")
      throw Error(ErrorCode::malformed_section, "quadratic objective not supported");
    if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
      long long v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || p != tok.data() + tok.size())
        throw Error(ErrorCode::malformed_section, "bad token '" + tok + "'");
      if (coeff) throw Error(ErrorCode::malformed_section, "two coefficients in a row");
      coeff = v;
      continue;
    }
    VarId var;
    if (!parse_var_name(tok, var))
      throw Error(ErrorCode::malformed_section, "bad token '" + tok + "'");
    terms.push_back({sign * coeff.value_or(1), var});
    sign = 1;
    coeff.reset();
  }
  if (coeff) throw Error(ErrorCode::malformed_section, "dangling coefficient at end");
  return terms;
}

}  // namespace

MilpModel parse_lp(const std::string& text) {
  Parser p(text);
  std::string line;

  if (!p.next(line) || line != "Minimize")
    throw Error(ErrorCode::malformed_section, "expected Minimize");

  // Objective: gather lines until the next section keyword.
  std::string obj_text;
  while (p.peek(line) && !Parser::is_section(line)) {
    p.next(line);
    obj_text += " " + line;
  }
  auto obj_toks = tokenize(obj_text);
  if (obj_toks.empty() || obj_toks[0] != "obj:")
    throw Error(ErrorCode::malformed_section, "expected obj:");
  auto obj_terms = parse_terms(obj_toks, 1, obj_toks.size());

  if (!p.next(line) || line != "Subject To")
    throw Error(ErrorCode::malformed_section, "expected Subject To");

  // Rows until the next section keyword.
  struct RawRow {
    std::string name;
    std::vector<LinTerm> terms;
    Sense sense;
    long long rhs;
  };
  std::vector<RawRow> raw_rows;
  while (p.peek(line) && !Parser::is_section(line)) {
    p.next(line);
    auto toks = tokenize(line);
    if (toks.empty() || toks[0].back() != ':')
      throw Error(ErrorCode::malformed_section, "constraint without a name: " + line);
    RawRow row;
    row.name = toks[0].substr(0, toks[0].size() - 1);
    std::size_t sense_at = 0;
    for (std::size_t i = 1; i < toks.size(); ++i)
      if (toks[i] == "<=" || toks[i] == ">=") {
        sense_at = i;
        break;
      }
    if (sense_at == 0 || sense_at + 2 != toks.size())
      throw Error(ErrorCode::malformed_section, "malformed constraint: " + line);
    row.sense = toks[sense_at] == "<=" ? Sense::le : Sense::ge;
    row.rhs = p.parse_int(toks[sense_at + 1]);
    row.terms = parse_terms(toks, 1, sense_at);
    raw_rows.push_back(std::move(row));
  }

  // Optional Bounds section: "0 <= z_i_j <= 1" lines declare the z vars.
  std::vector<Edge> z_vars;
  if (p.peek(line) && line == "Bounds") {
    p.next(line);
    while (p.peek(line) && !Parser::is_section(line)) {
      p.next(line);
      auto toks = tokenize(line);
      VarId var;
      if (toks.size() != 5 || toks[0] != "0" || toks[1] != "<=" || toks[3] != "<=" ||
          toks[4] != "1" || !parse_var_name(toks[2], var) || var.kind != VarId::Kind::z)
        throw Error(ErrorCode::malformed_section, "malformed bound: " + line);
      const Edge e{var.i, var.j};
      if (std::find(z_vars.begin(), z_vars.end(), e) != z_vars.end())
        throw Error(ErrorCode::duplicate_bound, "duplicate bound for " + var.name());
      z_vars.push_back(e);
    }
  }

  // Optional Binaries section declares the x vars.
  std::vector<NodeId> x_vars;
  if (p.peek(line) && line == "Binaries") {
    p.next(line);
    while (p.peek(line) && !Parser::is_section(line)) {
      p.next(line);
      for (const auto& tok : tokenize(line)) {
        VarId var;
        if (!parse_var_name(tok, var) || var.kind != VarId::Kind::x)
          throw Error(ErrorCode::malformed_section, "malformed binary declaration: " + tok);
        if (std::find(x_vars.begin(), x_vars.end(), var.i) != x_vars.end())
          throw Error(ErrorCode::duplicate_entry, "duplicate binary " + var.name());
        x_vars.push_back(var.i);
      }
    }
  }

  if (!p.next(line) || line != "End")
    throw Error(ErrorCode::malformed_section, "expected End");
  if (p.next(line)) throw Error(ErrorCode::malformed_section, "trailing content after End");

  // Assemble the model; every referenced variable must be declared.
  MilpModel m;
  m.offset = p.offset;
  m.x_vars = x_vars;
  m.z_vars = z_vars;
  m.x_obj.assign(x_vars.size(), 0);
  m.z_obj.assign(z_vars.size(), 0);

  auto x_pos = [&](NodeId v) -> std::size_t {
    auto it = std::find(x_vars.begin(), x_vars.end(), v);
    if (it == x_vars.end())
      throw Error(ErrorCode::unknown_variable, "undeclared variable " + x_var(v).name());
    return static_cast<std::size_t>(it - x_vars.begin());
  };
  auto z_pos = [&](const Edge& e) -> std::size_t {
    auto it = std::find(z_vars.begin(), z_vars.end(), e);
    if (it == z_vars.end())
      throw Error(ErrorCode::unknown_variable,
                  "undeclared variable " + z_var(e.first, e.second).name());
    return static_cast<std::size_t>(it - z_vars.begin());
  };
  auto check_var = [&](const VarId& var) {
    if (var.kind == VarId::Kind::x)
      x_pos(var.i);
    else
      z_pos(Edge{var.i, var.j});
  };

  for (const auto& t : obj_terms) {
    if (t.var.kind == VarId::Kind::x)
      m.x_obj[x_pos(t.var.i)] = t.coeff;
    else
      m.z_obj[z_pos(Edge{t.var.i, t.var.j})] = t.coeff;
  }
  for (auto& row : raw_rows) {
    for (const auto& t : row.terms) check_var(t.var);
    m.rows.push_back({std::move(row.name), std::move(row.terms), row.sense, row.rhs});
  }
  return m;
}

}  // namespace chimeraq
