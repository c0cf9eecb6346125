#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>

#include "skan/core.hpp"

/// Line-oriented text formats.
///
/// Complexes:
///   semisimplicial <N_max>
///   simplex <id> <degree>
///   face <id> <i> <target-id>
/// or
///   multisemisimplicial <l> <M_max>
///   simplex <id> <n1> ... <nl>
///   face <id> <p> <i> <target-id>        (p is a 1-based axis)
///
/// Degeneracy tables:
///   s <j> <x-id> <value-id>              (single)
///   t <j> <x-id> <value-id>
///   s <q> <j> <x-id> <value-id>          (multi; q is a 1-based axis)
///   t <q> <j> <x-id> <value-id>
///
/// Lines beginning with `#` and blank lines are ignored. Parse errors carry
/// the 1-based line number. Writers emit a canonical order (simplices by id,
/// faces by (id, axis, index), table entries by (x, axis, j)), so equal
/// inputs produce byte-identical files.
namespace skan {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

using AnyComplex = std::variant<SemiSimplicialSet, MultiSemiSimplicialSet>;

/// Reads either complex format, dispatching on the header line.
AnyComplex load_complex(std::istream& in);
AnyComplex load_complex_file(const std::string& path);

void save_complex(std::ostream& out, const SemiSimplicialSet& complex);
void save_complex(std::ostream& out, const MultiSemiSimplicialSet& complex);

struct DegeneracyTables {
  DegeneracyTable s;
  TTable t;
};

struct MultiDegeneracyTables {
  MultiDegeneracyTable s;
  MultiTTable t;
};

/// Reads `s`/`t` lines in the single format (3 numeric fields).
DegeneracyTables load_tables(std::istream& in);
DegeneracyTables load_tables_file(const std::string& path);

/// Reads `s`/`t` lines in the multi format (4 numeric fields).
MultiDegeneracyTables load_multi_tables(std::istream& in);
MultiDegeneracyTables load_multi_tables_file(const std::string& path);

/// Emits all s lines, then (when emit_t) all t lines.
void save_tables(std::ostream& out, const DegeneracyTable& s, const TTable& t, bool emit_t);
void save_tables(std::ostream& out, const MultiDegeneracyTable& s, const MultiTTable& t,
                 bool emit_t);

}  // namespace skan
