#pragma once

#include <complex>
#include <string>
#include <vector>

#include "skorokhod/conformal.hpp"
#include "skorokhod/distribution.hpp"
#include "skorokhod/fourier.hpp"
#include "skorokhod/montecarlo.hpp"

namespace skorokhod {

// shortest decimal that reparses to the same double
std::string format_full(double v);

// Whole-file text IO; writes go to a temp file in the same directory and are
// renamed into place. Failures throw io_error.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Map coefficients, CSV with header n,re_c_n,im_c_n and modes 1..N in order.
void write_map_csv(const std::string& path, const PowerSeriesMap& m);
PowerSeriesMap read_map_csv(const std::string& path);

// Cosine/sine series, CSV with header n,a_n,b_n and modes 1..N in order.
// The mean term is not stored; readers get a0 = 0.
void write_series_csv(const std::string& path, const FourierSeries& s);
FourierSeries read_series_csv(const std::string& path);

// One value per line after a `# seed=... n=... method=...` header line.
// extra_comments are emitted as additional `# ` lines after the header.
void write_batch(const std::string& path, const ExitBatch& batch,
                 const std::vector<std::string>& extra_comments = {});
ExitBatch read_batch(const std::string& path);

// One real per line; blank lines and # comments are skipped.
std::vector<double> read_samples(const std::string& path);

// Flat `key = value` text. Keys: kind (uniform | arcsine | two_point |
// empirical) plus the parameters of that kind: a, b | center, halfwidth |
// x1, p1, x2 | samples_path. A relative samples_path is resolved against the
// spec file's directory. Structural problems throw spec_error, unreadable
// files io_error.
DistributionSpec read_spec_file(const std::string& path);

// Structured text report, one `key = value` line each for energy, area,
// perimeter, chain_ok, verdict, tail_exponent, tail_bound.
std::string format_domain_report(const DomainReport& report);

// Single-path SVG document; points are (x, y) pairs, y axis flipped to match
// screen coordinates, viewBox fits the bounding box with a 5% margin.
std::string svg_path_document(const std::vector<std::complex<double>>& points,
                              bool closed);

}  // namespace skorokhod
