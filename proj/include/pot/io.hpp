#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "pot/network.hpp"

namespace pot {

// Malformed instance or model file; what() carries the line number.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Instance files: a `p pot <n> <m>` header, m lines `c <i> <j> <rels>`,
// `#` comments anywhere. Indices 0-based, i != j, rels a non-empty
// subset string in canonical '<' '>' '=' '|' order.
Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);
Instance load_instance(const std::string& path);
std::string serialize_instance(const Instance& ins);
void save_instance(const Instance& ins, const std::string& path);

// Model files: `s yes` or `s no`; a yes-model adds `q <var> <class>` for
// every variable and `o <c1> <c2>` for the strict-order edges.
struct ModelFile {
  bool yes = false;
  Model model;  // meaningful iff yes
};

ModelFile parse_model(std::istream& in);
ModelFile parse_model_text(const std::string& text);
ModelFile load_model(const std::string& path);
std::string serialize_model(const ModelFile& mf);
void save_model(const ModelFile& mf, const std::string& path);

}  // namespace pot
