#include "fracreduce/gridfn.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "fracreduce/errors.hpp"
#include "fracreduce/numio.hpp"

namespace fracreduce {

void validate(const GridFunction& g) {
  if (!(g.b > g.a)) throw DomainError("grid needs b > a");
  if (g.n < 1) throw DomainError("grid needs at least one subinterval");
  if (g.values.size() != static_cast<std::size_t>(g.n) + 1)
    throw DomainError("grid has " + std::to_string(g.values.size()) + " samples, expected " +
                      std::to_string(g.n + 1));
  for (const auto& v : g.values)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw DomainError("grid contains a non-finite sample");
}

GridFunction make_grid(double a, double b, int n) {
  GridFunction g{a, b, n, std::vector<Complex>(static_cast<std::size_t>(n) + 1)};
  validate(g);
  return g;
}

double sup_norm(const GridFunction& g, int from) {
  double m = 0.0;
  for (std::size_t k = static_cast<std::size_t>(from); k < g.values.size(); ++k)
    m = std::max(m, std::abs(g.values[k]));
  return m;
}

double sup_distance(const GridFunction& f, const GridFunction& g, int from) {
  if (f.values.size() != g.values.size()) throw DomainError("grid size mismatch");
  double m = 0.0;
  for (std::size_t k = static_cast<std::size_t>(from); k < f.values.size(); ++k)
    m = std::max(m, std::abs(f.values[k] - g.values[k]));
  return m;
}

void write_csv(const GridFunction& g, std::ostream& out) {
  out << "t,re,im\n";
  for (int k = 0; k <= g.n; ++k)
    out << format_double(g.node(k)) << ',' << format_double(g.values[k].real()) << ','
        << format_double(g.values[k].imag()) << '\n';
}

GridFunction read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DomainError("empty CSV");
  // tolerate a UTF-8 BOM and trailing CR
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t,re,im") throw DomainError("CSV header must be `t,re,im`, got `" + line + "`");

  std::vector<double> ts;
  std::vector<Complex> vs;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    double col[3];
    const char* s = line.c_str();
    for (int i = 0; i < 3; ++i) {
      char* end = nullptr;
      col[i] = std::strtod(s, &end);
      if (end == s) throw DomainError("CSV line " + std::to_string(lineno) + ": expected a number");
      s = end;
      if (i < 2) {
        if (*s != ',') throw DomainError("CSV line " + std::to_string(lineno) + ": expected `,`");
        ++s;
      }
    }
    ts.push_back(col[0]);
    vs.push_back({col[1], col[2]});
  }
  if (ts.size() < 2) throw DomainError("CSV needs at least two sample rows");
  GridFunction g{ts.front(), ts.back(), static_cast<int>(ts.size()) - 1, std::move(vs)};
  validate(g);
  // the t column must actually be the uniform grid it claims to be
  for (int k = 0; k <= g.n; ++k)
    if (std::abs(ts[static_cast<std::size_t>(k)] - g.node(k)) >
        1e-9 * std::max(1.0, std::abs(g.b - g.a)))
      throw DomainError("CSV t column is not a uniform grid at row " + std::to_string(k + 2));
  return g;
}

void write_csv_file(const GridFunction& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot open `" + path + "` for writing");
  write_csv(g, out);
}

GridFunction read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open `" + path + "`");
  return read_csv(in);
}

std::string to_json(const GridFunction& g) {
  std::string out = "{\"a\":" + format_double(g.a) + ",\"b\":" + format_double(g.b) +
                    ",\"n\":" + std::to_string(g.n) + ",\"values\":[";
  for (int k = 0; k <= g.n; ++k) {
    if (k) out += ',';
    out += '[' + format_double(g.values[k].real()) + ',' + format_double(g.values[k].imag()) + ']';
  }
  out += "]}";
  return out;
}

namespace {

struct JsonCursor {
  const char* s;
  void skip_ws() {
    while (*s == ' ' || *s == '\t' || *s == '\n' || *s == '\r') ++s;
  }
  void expect(char c) {
    skip_ws();
    if (*s != c) throw DomainError(std::string("grid JSON: expected `") + c + "`");
    ++s;
  }
  bool accept(char c) {
    skip_ws();
    if (*s != c) return false;
    ++s;
    return true;
  }
  double number() {
    skip_ws();
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end == s) throw DomainError("grid JSON: expected a number");
    s = end;
    return v;
  }
  std::string key() {
    expect('"');
    std::string k;
    while (*s && *s != '"') k += *s++;
    expect('"');
    return k;
  }
};

}  // namespace

GridFunction from_json(const std::string& text) {
  JsonCursor c{text.c_str()};
  GridFunction g;
  bool saw_values = false;
  c.expect('{');
  if (!c.accept('}')) {
    do {
      const std::string k = c.key();
      c.expect(':');
      if (k == "a") {
        g.a = c.number();
      } else if (k == "b") {
        g.b = c.number();
      } else if (k == "n") {
        g.n = static_cast<int>(c.number());
      } else if (k == "values") {
        saw_values = true;
        c.expect('[');
        if (!c.accept(']')) {
          do {
            c.expect('[');
            const double re = c.number();
            c.expect(',');
            const double im = c.number();
            c.expect(']');
            g.values.push_back({re, im});
          } while (c.accept(','));
          c.expect(']');
        }
      } else {
        throw DomainError("grid JSON: unknown key `" + k + "`");
      }
    } while (c.accept(','));
    c.expect('}');
  }
  if (!saw_values) throw DomainError("grid JSON: missing `values`");
  validate(g);
  return g;
}

}  // namespace fracreduce
