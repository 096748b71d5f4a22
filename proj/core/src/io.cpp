#include "skorokhod/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "skorokhod/errors.hpp"

namespace skorokhod {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool try_parse_double(const std::string& s, double* out) {
  const std::string t = trimmed(s);
  if (t.empty()) return false;
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size()) return false;
  *out = v;
  return true;
}

bool try_parse_uint(const std::string& s, std::uint64_t* out) {
  const std::string t = trimmed(s);
  if (t.empty() || t[0] == '-') return false;
  char* end = nullptr;
  const std::uint64_t v = std::strtoull(t.c_str(), &end, 10);
  if (end != t.c_str() + t.size()) return false;
  *out = v;
  return true;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(line);
  }
  return out;
}

// CSV with a fixed header and one (n, u, v) row per mode, n consecutive from 1
std::vector<std::pair<double, double>> read_mode_csv(const std::string& path,
                                                     const std::string& header) {
  const std::vector<std::string> lines = lines_of(read_text_file(path));
  std::size_t row = 0;
  std::vector<std::pair<double, double>> out;
  bool saw_header = false;
  for (const std::string& raw : lines) {
    const std::string line = trimmed(raw);
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != header)
        throw io_error(path + ": expected header '" + header + "'");
      saw_header = true;
      continue;
    }
    const std::vector<std::string> f = split(line, ',');
    std::uint64_t n = 0;
    double u = 0.0, v = 0.0;
    if (f.size() != 3 || !try_parse_uint(f[0], &n) || !try_parse_double(f[1], &u) ||
        !try_parse_double(f[2], &v) || !std::isfinite(u) || !std::isfinite(v))
      throw io_error(path + ": malformed row '" + line + "'");
    ++row;
    if (n != row)
      throw io_error(path + ": modes must be consecutive from 1, got " +
                     std::to_string(n) + " at row " + std::to_string(row));
    out.emplace_back(u, v);
  }
  if (!saw_header) throw io_error(path + ": empty file");
  return out;
}

void write_mode_csv(const std::string& path, const std::string& header,
                    const std::vector<std::pair<double, double>>& rows) {
  std::string text = header + "\n";
  for (std::size_t i = 0; i < rows.size(); ++i)
    text += std::to_string(i + 1) + "," + format_full(rows[i].first) + "," +
            format_full(rows[i].second) + "\n";
  write_text_file(path, text);
}

std::string format_g(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

}  // namespace

std::string format_full(double v) {
  for (int digits = 15; digits <= 17; ++digits) {
    const std::string s = format_g(v, digits);
    double back = 0.0;
    if (try_parse_double(s, &back) && (back == v || (std::isnan(back) && std::isnan(v))))
      return s;
  }
  return format_g(v, 17);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw io_error("read failed on " + path);
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open " + tmp + " for writing");
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw io_error("write failed on " + tmp);
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw io_error("cannot move " + tmp + " into place");
  }
}

void write_map_csv(const std::string& path, const PowerSeriesMap& m) {
  std::vector<std::pair<double, double>> rows(m.coeff.size());
  for (std::size_t k = 0; k < m.coeff.size(); ++k)
    rows[k] = {m.coeff[k].real(), m.coeff[k].imag()};
  write_mode_csv(path, "n,re_c_n,im_c_n", rows);
}

PowerSeriesMap read_map_csv(const std::string& path) {
  PowerSeriesMap m;
  for (const auto& [re, im] : read_mode_csv(path, "n,re_c_n,im_c_n"))
    m.coeff.emplace_back(re, im);
  return m;
}

void write_series_csv(const std::string& path, const FourierSeries& s) {
  std::vector<std::pair<double, double>> rows(s.order());
  for (std::size_t k = 0; k < s.order(); ++k) rows[k] = {s.a[k], s.b[k]};
  write_mode_csv(path, "n,a_n,b_n", rows);
}

FourierSeries read_series_csv(const std::string& path) {
  FourierSeries s;
  s.a0 = 0.0;
  for (const auto& [a, b] : read_mode_csv(path, "n,a_n,b_n")) {
    s.a.push_back(a);
    s.b.push_back(b);
  }
  return s;
}

void write_batch(const std::string& path, const ExitBatch& batch,
                 const std::vector<std::string>& extra_comments) {
  std::string text = "# seed=" + std::to_string(batch.seed) +
                     " n=" + std::to_string(batch.values.size()) +
                     " method=" + batch.method + "\n";
  if (batch.discarded > 0)
    text += "# discarded=" + std::to_string(batch.discarded) + "\n";
  for (const std::string& c : extra_comments) text += "# " + c + "\n";
  for (double v : batch.values) text += format_full(v) + "\n";
  write_text_file(path, text);
}

ExitBatch read_batch(const std::string& path) {
  ExitBatch batch;
  bool have_header_n = false;
  std::uint64_t header_n = 0;
  for (const std::string& raw : lines_of(read_text_file(path))) {
    const std::string line = trimmed(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream in(line.substr(1));
      std::string token;
      while (in >> token) {
        const std::size_t eq = token.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = token.substr(0, eq), value = token.substr(eq + 1);
        if (key == "seed") try_parse_uint(value, &batch.seed);
        if (key == "n") have_header_n = try_parse_uint(value, &header_n);
        if (key == "method") batch.method = value;
        if (key == "discarded") {
          std::uint64_t d = 0;
          if (try_parse_uint(value, &d)) batch.discarded = d;
        }
      }
      continue;
    }
    double v = 0.0;
    if (!try_parse_double(line, &v) || !std::isfinite(v))
      throw io_error(path + ": bad sample line '" + line + "'");
    batch.values.push_back(v);
  }
  if (have_header_n && header_n != batch.values.size())
    throw io_error(path + ": header n does not match the value count");
  batch.n = batch.values.size();
  return batch;
}

std::vector<double> read_samples(const std::string& path) {
  std::vector<double> out;
  for (const std::string& raw : lines_of(read_text_file(path))) {
    const std::string line = trimmed(raw);
    if (line.empty() || line[0] == '#') continue;
    double v = 0.0;
    if (!try_parse_double(line, &v) || !std::isfinite(v))
      throw io_error(path + ": bad sample line '" + line + "'");
    out.push_back(v);
  }
  return out;
}

namespace {

double spec_field(const std::string& path,
                  const std::vector<std::pair<std::string, std::string>>& fields,
                  const std::string& key) {
  for (const auto& [k, v] : fields)
    if (k == key) {
      double parsed = 0.0;
      if (!try_parse_double(v, &parsed) || !std::isfinite(parsed))
        throw spec_error(path + ": field '" + key + "' is not a number: " + v);
      return parsed;
    }
  throw spec_error(path + ": missing field '" + key + "'");
}

void reject_unknown(const std::string& path,
                    const std::vector<std::pair<std::string, std::string>>& fields,
                    std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : fields) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) throw spec_error(path + ": unexpected field '" + k + "'");
  }
}

}  // namespace

DistributionSpec read_spec_file(const std::string& path) {
  std::vector<std::pair<std::string, std::string>> fields;
  for (const std::string& raw : lines_of(read_text_file(path))) {
    const std::string line = trimmed(raw);
    if (line.empty() || line[0] == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw spec_error(path + ": expected 'key = value', got '" + line + "'");
    const std::string key = trimmed(line.substr(0, eq));
    const std::string value = trimmed(line.substr(eq + 1));
    for (const auto& [k, v] : fields)
      if (k == key) throw spec_error(path + ": duplicate field '" + key + "'");
    fields.emplace_back(key, value);
  }

  std::string kind;
  for (const auto& [k, v] : fields)
    if (k == "kind") kind = v;
  if (kind.empty()) throw spec_error(path + ": missing field 'kind'");

  DistributionSpec spec;
  if (kind == "uniform") {
    reject_unknown(path, fields, {"kind", "a", "b"});
    spec.law = Uniform{spec_field(path, fields, "a"), spec_field(path, fields, "b")};
  } else if (kind == "arcsine") {
    reject_unknown(path, fields, {"kind", "center", "halfwidth"});
    spec.law = Arcsine{spec_field(path, fields, "center"),
                       spec_field(path, fields, "halfwidth")};
  } else if (kind == "two_point") {
    reject_unknown(path, fields, {"kind", "x1", "p1", "x2"});
    spec.law = TwoPoint{spec_field(path, fields, "x1"),
                        spec_field(path, fields, "p1"),
                        spec_field(path, fields, "x2")};
  } else if (kind == "empirical") {
    reject_unknown(path, fields, {"kind", "samples_path"});
    std::string samples_path;
    for (const auto& [k, v] : fields)
      if (k == "samples_path") samples_path = v;
    if (samples_path.empty())
      throw spec_error(path + ": missing field 'samples_path'");
    std::filesystem::path p(samples_path);
    if (p.is_relative()) p = std::filesystem::path(path).parent_path() / p;
    spec.law = Empirical{read_samples(p.string())};
  } else {
    throw spec_error(path + ": unknown kind '" + kind + "'");
  }
  return spec;
}

std::string format_domain_report(const DomainReport& report) {
  std::string text;
  text += "energy = " + format_full(report.energy) + "\n";
  text += "area = " + format_full(report.area) + "\n";
  text += "perimeter = " + format_full(report.perimeter) + "\n";
  text += std::string("chain_ok = ") + (report.chain_holds ? "true" : "false") + "\n";
  text += std::string("verdict = ") + verdict_name(report.diagnostic.verdict) + "\n";
  text += "tail_exponent = " + format_full(report.diagnostic.tail_exponent) + "\n";
  text += "tail_bound = " + format_full(report.diagnostic.tail_bound) + "\n";
  return text;
}

std::string svg_path_document(const std::vector<std::complex<double>>& points,
                              bool closed) {
  if (points.size() < 2) throw spec_error("svg path needs at least 2 points");
  double xlo = points[0].real(), xhi = xlo;
  double ylo = -points[0].imag(), yhi = ylo;
  for (const auto& p : points) {
    xlo = std::min(xlo, p.real());
    xhi = std::max(xhi, p.real());
    ylo = std::min(ylo, -p.imag());
    yhi = std::max(yhi, -p.imag());
  }
  const double span = std::max({xhi - xlo, yhi - ylo, 1e-9});
  const double margin = 0.05 * span;
  std::string d = "M";
  for (std::size_t i = 0; i < points.size(); ++i) {
    d += (i == 0 ? " " : " L ");
    d += format_g(points[i].real(), 9) + " " + format_g(-points[i].imag(), 9);
  }
  if (closed) d += " Z";
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
  svg += format_g(xlo - margin, 9) + " " + format_g(ylo - margin, 9) + " " +
         format_g(xhi - xlo + 2 * margin, 9) + " " +
         format_g(yhi - ylo + 2 * margin, 9) + "\">\n";
  svg += "<path d=\"" + d + "\" fill=\"none\" stroke=\"black\" stroke-width=\"" +
         format_g(0.004 * span, 9) + "\"/>\n</svg>\n";
  return svg;
}

}  // namespace skorokhod
