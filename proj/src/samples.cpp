#include "specfact/samples.hpp"

#include <cstdio>
#include <memory>
#include <string>

#include "specfact/error.hpp"

namespace specfact {
namespace {

struct FileCloser {
  void operator()(std::FILE* f) const { std::fclose(f); }
};
using File = std::unique_ptr<std::FILE, FileCloser>;

File open(const std::filesystem::path& path) {
  File f(std::fopen(path.c_str(), "w"));
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
  return f;
}

void finish(File& f, const std::filesystem::path& path) {
  if (std::fflush(f.get()) != 0 || std::ferror(f.get()))
    throw Error(ErrorCode::InvalidArgument, "write failed for " + path.string());
}

double node(std::size_t j, std::size_t n, double length) {
  return length * static_cast<double>(j) / static_cast<double>(n);
}

}  // namespace

void emit_samples(const Function& f, std::size_t n, const std::filesystem::path& path, double length) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "sample count must be positive");
  File out = open(path);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (const auto* p = std::get_if<TrigPoly>(&f)) {
    const std::vector<Complex> v = sample(*p, n);
    std::fprintf(out.get(), "x,re,im\n");
    for (std::size_t j = 0; j < n; ++j)
      std::fprintf(out.get(), "%.17g,%.17g,%.17g\n", node(j, n, two_pi), v[j].real(), v[j].imag());
  } else if (const auto* q = std::get_if<BivarPoly>(&f)) {
    const std::vector<Complex> v = sample(*q, n);
    std::fprintf(out.get(), "x,y,re\n");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        std::fprintf(out.get(), "%.17g,%.17g,%.17g\n", node(i, n, two_pi), node(j, n, two_pi), v[i * n + j].real());
  } else {
    const APFunc& a = std::get<APFunc>(f);
    std::fprintf(out.get(), "x,re,im\n");
    for (std::size_t j = 0; j < n; ++j) {
      const double x = node(j, n, length);
      const Complex v = eval(a, x);
      std::fprintf(out.get(), "%.17g,%.17g,%.17g\n", x, v.real(), v.imag());
    }
  }
  finish(out, path);
}

void emit_fit(const TrigPoly& w, const TrigPoly& h, std::size_t n, const std::filesystem::path& path) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "sample count must be positive");
  File out = open(path);
  const std::vector<Complex> ws = sample(w, n);
  const std::vector<Complex> hs = sample(h, n);
  std::fprintf(out.get(), "x,w,h_sq\n");
  for (std::size_t j = 0; j < n; ++j)
    std::fprintf(out.get(), "%.17g,%.17g,%.17g\n", node(j, n, 2.0 * std::numbers::pi), ws[j].real(), std::norm(hs[j]));
  finish(out, path);
}

}  // namespace specfact
