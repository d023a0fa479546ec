#include "dmt/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace dmt {

namespace {

std::vector<std::string_view> clean_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (!line.empty()) lines.push_back(line);
    if (eol == text.size()) break;
  }
  return lines;
}

std::vector<int> parse_vertices(std::string_view part, const char* what) {
  std::vector<int> verts;
  std::size_t i = 0;
  while (i < part.size()) {
    while (i < part.size() && (part[i] == ' ' || part[i] == '\t')) ++i;
    if (i >= part.size()) break;
    std::size_t j = i;
    while (j < part.size() && part[j] != ' ' && part[j] != '\t') ++j;
    int v = 0;
    auto [ptr, ec] = std::from_chars(part.data() + i, part.data() + j, v);
    if (ec != std::errc{} || ptr != part.data() + j || v < 0) {
      throw ParseError(std::string("bad vertex token in ") + what);
    }
    verts.push_back(v);
    i = j;
  }
  if (verts.empty()) throw ParseError(std::string("missing vertices in ") + what);
  return verts;
}

int resolve(const SimplicialComplex& K, std::vector<int> verts, const char* what) {
  Simplex s{std::move(verts)};
  auto id = K.id_of(s);
  if (!id) throw ParseError(std::string(what) + " references simplex '" + s.str() +
                            "' not in the complex");
  return *id;
}

}  // namespace

GradientVectorField parse_gvf(const SimplicialComplex& K, std::string_view text) {
  std::vector<GvfPair> pairs;
  for (auto line : clean_lines(text)) {
    auto bar = line.find('|');
    if (bar == std::string_view::npos) {
      throw ParseError("gvf line missing '|': '" + std::string(line) + "'");
    }
    int alpha = resolve(K, parse_vertices(line.substr(0, bar), "gvf pair"), "gvf pair");
    int sigma = resolve(K, parse_vertices(line.substr(bar + 1), "gvf pair"), "gvf pair");
    pairs.push_back({alpha, sigma});
  }
  try {
    return GradientVectorField(K, std::move(pairs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_gvf(const SimplicialComplex& K, const GradientVectorField& V) {
  std::ostringstream os;
  for (const auto& p : V.pairs()) {
    os << K.simplex(p.alpha).str() << " | " << K.simplex(p.sigma).str() << '\n';
  }
  return os.str();
}

DiscreteMorseFunction parse_dmf(const SimplicialComplex& K, std::string_view text) {
  std::vector<Rational> values(K.size());
  std::vector<char> seen(K.size(), 0);
  for (auto line : clean_lines(text)) {
    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("dmf line missing ':': '" + std::string(line) + "'");
    }
    int id = resolve(K, parse_vertices(line.substr(0, colon), "dmf entry"), "dmf entry");
    std::string_view value = line.substr(colon + 1);
    while (!value.empty() && (value.front() == ' ' || value.front() == '\t')) {
      value.remove_prefix(1);
    }
    try {
      values[id] = Rational::parse(value);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad rational value '" + std::string(value) + "'");
    }
    if (seen[id]) throw ParseError("duplicate dmf value for '" + K.simplex(id).str() + "'");
    seen[id] = 1;
  }
  for (int id = 0; id < K.size(); ++id) {
    if (!seen[id]) throw ParseError("missing dmf value for '" + K.simplex(id).str() + "'");
  }
  return DiscreteMorseFunction(K, std::move(values));
}

std::string serialize_dmf(const SimplicialComplex& K, const DiscreteMorseFunction& f) {
  std::ostringstream os;
  for (int id = 0; id < K.size(); ++id) {
    os << K.simplex(id).str() << " : " << f.value(id) << '\n';
  }
  return os.str();
}

std::string dump_boundary_matrices(const std::vector<Mat>& D) {
  std::ostringstream os;
  for (std::size_t q = 0; q < D.size(); ++q) {
    os << "dim " << q << ": rows=" << D[q].rows() << ", cols=" << D[q].cols() << '\n';
    os << D[q].dump_rows();
  }
  return os.str();
}

}  // namespace dmt
