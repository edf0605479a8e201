#include "pot/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pot {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

// Splits on blanks; tolerates trailing whitespace and '\r'.
std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  if (!out.empty()) {
    std::string& last = out.back();
    while (!last.empty() && last.back() == '\r') last.pop_back();
    if (last.empty()) out.pop_back();
  }
  return out;
}

bool parse_int(const std::string& tok, int& out) {
  try {
    size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size() || v < -1000000000L || v > 1000000000L) return false;
    out = int(v);
    return true;
  } catch (...) {
    return false;
  }
}

}  // namespace

Instance parse_instance(std::istream& in) {
  Instance ins;
  bool have_header = false;
  int declared_m = 0, seen_m = 0;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    std::vector<std::string> t = tokens_of(line);
    if (t.empty() || t[0][0] == '#') continue;
    if (t[0] == "p") {
      if (have_header) fail(lineno, "duplicate header");
      if (t.size() != 4 || t[1] != "pot") fail(lineno, "expected 'p pot <n> <m>'");
      if (!parse_int(t[2], ins.n) || ins.n <= 0) fail(lineno, "bad variable count");
      if (!parse_int(t[3], declared_m) || declared_m < 0) fail(lineno, "bad constraint count");
      have_header = true;
    } else if (t[0] == "c") {
      if (!have_header) fail(lineno, "constraint before header");
      if (t.size() != 4) fail(lineno, "expected 'c <i> <j> <rels>'");
      Constraint c;
      if (!parse_int(t[1], c.i) || !parse_int(t[2], c.j)) fail(lineno, "bad index");
      if (c.i < 0 || c.i >= ins.n || c.j < 0 || c.j >= ins.n) fail(lineno, "index out of range");
      if (c.i == c.j) fail(lineno, "constraint on a variable and itself");
      if (!RelSet::parse(t[3], c.rels) || c.rels.is_empty()) fail(lineno, "bad relation set");
      ins.constraints.push_back(c);
      ++seen_m;
    } else {
      fail(lineno, "unknown line tag '" + t[0] + "'");
    }
  }
  if (!have_header) throw ParseError("line 1: missing 'p pot' header");
  if (seen_m != declared_m)
    throw ParseError("header declares " + std::to_string(declared_m) + " constraints, found " +
                     std::to_string(seen_m));
  return ins;
}

Instance parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_instance(in);
}

std::string serialize_instance(const Instance& ins) {
  std::ostringstream out;
  out << "p pot " << ins.n << ' ' << ins.constraints.size() << '\n';
  for (const Constraint& c : ins.constraints)
    out << "c " << c.i << ' ' << c.j << ' ' << c.rels.str() << '\n';
  return out.str();
}

void save_instance(const Instance& ins, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << serialize_instance(ins);
}

ModelFile parse_model(std::istream& in) {
  ModelFile mf;
  bool have_status = false;
  std::vector<std::pair<int, int>> assigns;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    std::vector<std::string> t = tokens_of(line);
    if (t.empty() || t[0][0] == '#') continue;
    if (t[0] == "s") {
      if (have_status) fail(lineno, "duplicate status line");
      if (t.size() != 2 || (t[1] != "yes" && t[1] != "no")) fail(lineno, "expected 's yes' or 's no'");
      mf.yes = t[1] == "yes";
      have_status = true;
    } else if (t[0] == "q") {
      if (!have_status || !mf.yes) fail(lineno, "'q' line outside a yes-model");
      int var = 0, cls = 0;
      if (t.size() != 3 || !parse_int(t[1], var) || !parse_int(t[2], cls) || var < 0 || cls < 0)
        fail(lineno, "expected 'q <var> <class>'");
      assigns.emplace_back(var, cls);
    } else if (t[0] == "o") {
      if (!have_status || !mf.yes) fail(lineno, "'o' line outside a yes-model");
      int c1 = 0, c2 = 0;
      if (t.size() != 3 || !parse_int(t[1], c1) || !parse_int(t[2], c2) || c1 < 0 || c2 < 0)
        fail(lineno, "expected 'o <c1> <c2>'");
      mf.model.strict_edges.emplace_back(c1, c2);
    } else {
      fail(lineno, "unknown line tag '" + t[0] + "'");
    }
  }
  if (!have_status) throw ParseError("line 1: missing 's' status line");
  if (!mf.yes) return mf;
  if (assigns.empty()) throw ParseError("yes-model with no 'q' lines");
  int n = 0;
  for (auto [var, cls] : assigns) n = std::max(n, var + 1);
  mf.model.class_of.assign(n, -1);
  for (auto [var, cls] : assigns) {
    if (mf.model.class_of[var] != -1) throw ParseError("duplicate 'q' line for variable " + std::to_string(var));
    mf.model.class_of[var] = cls;
  }
  for (int v = 0; v < n; ++v)
    if (mf.model.class_of[v] == -1) throw ParseError("missing 'q' line for variable " + std::to_string(v));
  return mf;
}

ModelFile parse_model_text(const std::string& text) {
  std::istringstream in(text);
  return parse_model(in);
}

ModelFile load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_model(in);
}

std::string serialize_model(const ModelFile& mf) {
  std::ostringstream out;
  out << "s " << (mf.yes ? "yes" : "no") << '\n';
  if (mf.yes) {
    for (size_t v = 0; v < mf.model.class_of.size(); ++v)
      out << "q " << v << ' ' << mf.model.class_of[v] << '\n';
    for (auto [c1, c2] : mf.model.strict_edges) out << "o " << c1 << ' ' << c2 << '\n';
  }
  return out.str();
}

void save_model(const ModelFile& mf, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << serialize_model(mf);
}

}  // namespace pot
