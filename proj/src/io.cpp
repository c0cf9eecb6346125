#include "skan/io.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

namespace skan {
namespace {

struct Line {
  int number = 0;
  std::string keyword;
  std::vector<long long> fields;
};

// Tokenizes the stream into keyword + integer fields, skipping comments and
// blank lines.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream ls(raw);
    std::string keyword;
    if (!(ls >> keyword)) continue;   // blank
    if (keyword[0] == '#') continue;  // comment
    Line line;
    line.number = number;
    line.keyword = keyword;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        line.fields.push_back(v);
      } catch (const std::exception&) {
        throw ParseError(number, "expected an integer, got '" + tok + "'");
      }
    }
    out.push_back(std::move(line));
  }
  return out;
}

void expect_fields(const Line& line, std::size_t n) {
  if (line.fields.size() != n)
    throw ParseError(line.number, "'" + line.keyword + "' takes " + std::to_string(n) +
                                      " fields, got " + std::to_string(line.fields.size()));
}

SimplexId to_id(const Line& line, long long v) {
  if (v < 0 || v >= static_cast<long long>(SimplexId::invalid_value))
    throw ParseError(line.number, "simplex id " + std::to_string(v) + " out of range");
  return SimplexId{static_cast<std::uint32_t>(v)};
}

int to_small(const Line& line, long long v, const char* what) {
  if (v < 0 || v > 1'000'000)
    throw ParseError(line.number, std::string(what) + " " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

SemiSimplicialSet parse_single(const std::vector<Line>& lines, std::size_t start, int truncation) {
  SemiSimplicialSetBuilder builder(truncation);
  for (std::size_t k = start; k < lines.size(); ++k) {
    const Line& line = lines[k];
    try {
      if (line.keyword == "simplex") {
        expect_fields(line, 2);
        builder.add_simplex(to_id(line, line.fields[0]), to_small(line, line.fields[1], "degree"));
      } else if (line.keyword == "face") {
        expect_fields(line, 3);
        builder.set_face(to_id(line, line.fields[0]), to_small(line, line.fields[1], "face index"),
                         to_id(line, line.fields[2]));
      } else {
        throw ParseError(line.number, "unknown keyword '" + line.keyword + "'");
      }
    } catch (const StructuralError& e) {
      throw ParseError(line.number, e.what());
    }
  }
  return std::move(builder).build();
}

MultiSemiSimplicialSet parse_multi(const std::vector<Line>& lines, std::size_t start, int axes,
                                   int truncation) {
  MultiSemiSimplicialSetBuilder builder(axes, truncation);
  for (std::size_t k = start; k < lines.size(); ++k) {
    const Line& line = lines[k];
    try {
      if (line.keyword == "simplex") {
        expect_fields(line, static_cast<std::size_t>(axes) + 1);
        std::vector<int> entries;
        for (int p = 1; p <= axes; ++p)
          entries.push_back(to_small(line, line.fields[static_cast<std::size_t>(p)], "degree"));
        builder.add_simplex(to_id(line, line.fields[0]), MultiIndex(std::move(entries)));
      } else if (line.keyword == "face") {
        expect_fields(line, 4);
        builder.set_face(to_id(line, line.fields[0]), to_small(line, line.fields[1], "axis"),
                         to_small(line, line.fields[2], "face index"), to_id(line, line.fields[3]));
      } else {
        throw ParseError(line.number, "unknown keyword '" + line.keyword + "'");
      }
    } catch (const StructuralError& e) {
      throw ParseError(line.number, e.what());
    }
  }
  return std::move(builder).build();
}

}  // namespace

AnyComplex load_complex(std::istream& in) {
  const std::vector<Line> lines = tokenize(in);
  if (lines.empty()) throw ParseError(1, "empty input, expected a header line");
  const Line& head = lines[0];
  try {
    if (head.keyword == "semisimplicial") {
      expect_fields(head, 1);
      return parse_single(lines, 1, to_small(head, head.fields[0], "truncation"));
    }
    if (head.keyword == "multisemisimplicial") {
      expect_fields(head, 2);
      return parse_multi(lines, 1, to_small(head, head.fields[0], "axis count"),
                         to_small(head, head.fields[1], "truncation"));
    }
  } catch (const StructuralError& e) {
    // builder.build() failures (missing faces etc.) have no single line; cite
    // the last line of the file.
    throw ParseError(lines.back().number, e.what());
  }
  throw ParseError(head.number, "expected 'semisimplicial' or 'multisemisimplicial' header, got '" +
                                    head.keyword + "'");
}

AnyComplex load_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open '" + path + "'");
  return load_complex(in);
}

void save_complex(std::ostream& out, const SemiSimplicialSet& complex) {
  out << "semisimplicial " << complex.truncation_degree() << "\n";
  for (std::uint32_t v = 0; v < complex.id_bound(); ++v)
    if (const SimplexId x{v}; complex.contains(x))
      out << "simplex " << v << " " << complex.degree(x) << "\n";
  for (std::uint32_t v = 0; v < complex.id_bound(); ++v) {
    const SimplexId x{v};
    if (!complex.contains(x) || complex.degree(x) == 0) continue;
    for (int i = 0; i <= complex.degree(x); ++i)
      out << "face " << v << " " << i << " " << complex.face(x, i).value << "\n";
  }
}

void save_complex(std::ostream& out, const MultiSemiSimplicialSet& complex) {
  out << "multisemisimplicial " << complex.axes() << " " << complex.truncation_total() << "\n";
  for (std::uint32_t v = 0; v < complex.id_bound(); ++v) {
    const SimplexId x{v};
    if (!complex.contains(x)) continue;
    out << "simplex " << v;
    for (int e : complex.index_of(x).entries()) out << " " << e;
    out << "\n";
  }
  for (std::uint32_t v = 0; v < complex.id_bound(); ++v) {
    const SimplexId x{v};
    if (!complex.contains(x)) continue;
    const MultiIndex& n = complex.index_of(x);
    for (int p = 1; p <= complex.axes(); ++p) {
      if (n.entry(p) == 0) continue;
      for (int i = 0; i <= n.entry(p); ++i)
        out << "face " << v << " " << p << " " << i << " " << complex.face(x, p, i).value << "\n";
    }
  }
}

DegeneracyTables load_tables(std::istream& in) {
  DegeneracyTables tables;
  for (const Line& line : tokenize(in)) {
    if (line.keyword != "s" && line.keyword != "t")
      throw ParseError(line.number, "unknown keyword '" + line.keyword + "'");
    expect_fields(line, 3);
    const int j = to_small(line, line.fields[0], "index");
    const SimplexId x = to_id(line, line.fields[1]);
    const SimplexId v = to_id(line, line.fields[2]);
    auto& table = line.keyword == "s" ? tables.s : tables.t;
    if (!table.emplace(std::make_pair(x, j), v).second)
      throw ParseError(line.number, "duplicate table entry");
  }
  return tables;
}

DegeneracyTables load_tables_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open '" + path + "'");
  return load_tables(in);
}

MultiDegeneracyTables load_multi_tables(std::istream& in) {
  MultiDegeneracyTables tables;
  for (const Line& line : tokenize(in)) {
    if (line.keyword != "s" && line.keyword != "t")
      throw ParseError(line.number, "unknown keyword '" + line.keyword + "'");
    expect_fields(line, 4);
    const int q = to_small(line, line.fields[0], "axis");
    const int j = to_small(line, line.fields[1], "index");
    const SimplexId x = to_id(line, line.fields[2]);
    const SimplexId v = to_id(line, line.fields[3]);
    auto& table = line.keyword == "s" ? tables.s : tables.t;
    if (!table.emplace(std::make_tuple(x, q, j), v).second)
      throw ParseError(line.number, "duplicate table entry");
  }
  return tables;
}

MultiDegeneracyTables load_multi_tables_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open '" + path + "'");
  return load_multi_tables(in);
}

void save_tables(std::ostream& out, const DegeneracyTable& s, const TTable& t, bool emit_t) {
  for (const auto& [key, value] : s)
    out << "s " << key.second << " " << key.first.value << " " << value.value << "\n";
  if (!emit_t) return;
  for (const auto& [key, value] : t)
    out << "t " << key.second << " " << key.first.value << " " << value.value << "\n";
}

void save_tables(std::ostream& out, const MultiDegeneracyTable& s, const MultiTTable& t,
                 bool emit_t) {
  for (const auto& [key, value] : s)
    out << "s " << std::get<1>(key) << " " << std::get<2>(key) << " " << std::get<0>(key).value
        << " " << value.value << "\n";
  if (!emit_t) return;
  for (const auto& [key, value] : t)
    out << "t " << std::get<1>(key) << " " << std::get<2>(key) << " " << std::get<0>(key).value
        << " " << value.value << "\n";
}

}  // namespace skan
