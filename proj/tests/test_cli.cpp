#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dmt/cli.hpp"
#include "dmt/io.hpp"
#include "fixtures.hpp"

using namespace dmt;
namespace fx = dmt::fixtures;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("dmt_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }

  std::string file(const std::string& name, const std::string& content) const {
    auto p = path / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p.string();
  }
};

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("validate: acyclic field passes, cyclic field prints its witness") {
  TempDir tmp;
  auto complex = tmp.file("tri.txt", "0 1\n1 2\n0 2\n");
  auto good = tmp.file("good.gvf", "0 | 0 1\n");
  auto cyc = tmp.file("cyc.gvf", "0 | 0 1\n1 | 1 2\n2 | 0 2\n");

  auto ok = run({"validate", "--complex", complex, "--gvf", good});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("\"valid\": true") != std::string::npos);

  auto bad = run({"validate", "--complex", complex, "--gvf", cyc});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("\"cycle\"") != std::string::npos);
}

TEST_CASE("validate: dmf files and parse failures") {
  TempDir tmp;
  auto complex = tmp.file("edge.txt", "0 1\n");
  auto dmf = tmp.file("f.dmf", "0 : 2\n1 : 0\n0 1 : 1\n");
  CHECK(run({"validate", "--complex", complex, "--dmf", dmf}).code == 0);

  auto broken = tmp.file("broken.dmf", "0 : 2\n");  // missing values
  CHECK(run({"validate", "--complex", complex, "--dmf", broken}).code == 2);

  auto invalid = tmp.file("invalid.dmf", "0 : 2\n1 : 2\n0 1 : 1\n");
  CHECK(run({"validate", "--complex", complex, "--dmf", invalid}).code == 1);

  CHECK(run({"validate", "--complex", tmp.file("bad.txt", "0 x\n"), "--gvf", dmf}).code == 2);
  CHECK(run({"validate", "--complex", complex}).code == 2);
}

TEST_CASE("homology reports match the fixtures") {
  TempDir tmp;
  auto complex = tmp.file("tri.txt", "0 1\n1 2\n0 2\n");
  auto r = run({"homology", "--complex", complex});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"betti\": [\n    1,\n    1\n  ]") != std::string::npos);

  auto gvf = tmp.file("v.gvf", "0 | 0 1\n");
  auto r2 = run({"homology", "--complex", complex, "--gvf", gvf});
  CHECK(r2.code == 0);
  CHECK(r2.out.find("\"betti_equal_simplicial\": true") != std::string::npos);
  CHECK(r2.out.find("\"pass\": true") != std::string::npos);

  auto fig = tmp.file("hexagon.txt", "1 2\n2 3\n3 4\n4 5\n1 5 6\n");
  auto v1 = tmp.file("v1.gvf", "2 | 1 2\n6 | 5 6\n3 | 3 4\n5 | 4 5\n1 | 1 5\n");
  auto r3 = run({"homology", "--complex", fig, "--gvf", v1});
  CHECK(r3.code == 0);
  CHECK(r3.out.find("\"critical_counts\": [\n    1,\n    2,\n    1\n  ]") != std::string::npos);
  CHECK(r3.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("connect produces the two-step edge sequence") {
  TempDir tmp;
  auto complex = tmp.file("edge.txt", "0 1\n");
  auto a = tmp.file("a.gvf", "0 | 0 1\n");
  auto b = tmp.file("b.gvf", "1 | 0 1\n");
  auto r = run({"connect", "--complex", complex, "--gvf", a, "--gvf", b});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"length\": 2") != std::string::npos);
  CHECK(r.out.find("\"direction\": \"birth\"") != std::string::npos);
  CHECK(r.out.find("\"direction\": \"death\"") != std::string::npos);
  CHECK(r.out.find("\"composite_iso\": true") != std::string::npos);

  auto same = run({"connect", "--complex", complex, "--gvf", a, "--gvf", a});
  CHECK(same.code == 0);
  CHECK(same.out.find("\"length\": 0") != std::string::npos);
}

TEST_CASE("verify is exhaustive by default and byte-deterministic when sampled") {
  TempDir tmp;
  auto complex = tmp.file("tri.txt", "0 1\n1 2\n0 2\n");
  auto r = run({"verify", "--complex", complex});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"mode\": \"exhaustive\"") != std::string::npos);
  CHECK(r.out.find("\"relations_checked\": 24") != std::string::npos);
  CHECK(r.out.find("\"pass\": true") != std::string::npos);

  auto s1 = run({"verify", "--complex", complex, "--samples", "20", "--seed", "7"});
  auto s2 = run({"verify", "--complex", complex, "--samples", "20", "--seed", "7"});
  CHECK(s1.code == 0);
  CHECK(s1.out == s2.out);

  auto s3 = run({"verify", "--complex", complex, "--samples", "20", "--seed", "8"});
  CHECK(s3.code == 0);
}

TEST_CASE("morse-space counts and DOT output") {
  TempDir tmp;
  auto complex = tmp.file("tri.txt", "0 1\n1 2\n0 2\n");
  auto dot_path = (tmp.path / "out.dot").string();
  auto r = run({"morse-space", "--complex", complex, "--betti", "--dot", dot_path});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"num_matchings\": 16") != std::string::npos);
  CHECK(r.out.find("\"num_vertices\": 6") != std::string::npos);
  CHECK(r.out.find("\"components\": 1") != std::string::npos);
  std::ifstream dot(dot_path);
  CHECK(dot.good());

  auto edge = tmp.file("edge.txt", "0 1\n");
  auto plain = run({"morse-space", "--complex", edge});
  CHECK(plain.out.find("\"components\": 2") != std::string::npos);
  auto aug = run({"morse-space", "--complex", edge, "--augmented"});
  CHECK(aug.out.find("\"components\": 1") != std::string::npos);
}

TEST_CASE("guards map to exit code 3") {
  TempDir tmp;
  auto complex = tmp.file("tri.txt", "0 1\n1 2\n0 2\n");
  auto r = run({"morse-space", "--complex", complex, "--max-matchings", "3"});
  CHECK(r.code == 3);
  CHECK(r.err.find("guard") != std::string::npos);
}

TEST_CASE("usage errors exit 2, help exits 0") {
  CHECK(run({"validate"}).code == 2);          // missing --complex
  CHECK(run({"frobnicate"}).code == 2);        // unknown subcommand
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("text format renders one key per line") {
  TempDir tmp;
  auto complex = tmp.file("edge.txt", "0 1\n");
  auto r = run({"homology", "--complex", complex, "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out.find("euler: 1") != std::string::npos);
}

TEST_CASE("gvf and dmf serialization round-trip through the parsers") {
  auto K = fx::hexagon();
  auto V = fx::hexagon_v1(K);
  CHECK(parse_gvf(K, serialize_gvf(K, V)) == V);

  auto f = gvf_to_dmf(K, V);
  auto f2 = parse_dmf(K, serialize_dmf(K, f));
  CHECK(f2.values() == f.values());
}

TEST_CASE("shipped fixture files match the in-code corpus") {
  auto read = [](const std::string& name) {
    std::ifstream in(std::string(DMT_FIXTURE_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  };
  auto same = [](const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.serialize() == b.serialize();
  };
  CHECK(same(SimplicialComplex::parse(read("edge.txt")), fx::edge()));
  CHECK(same(SimplicialComplex::parse(read("triangle_graph.txt")), fx::triangle_graph()));
  CHECK(same(SimplicialComplex::parse(read("filled_triangle.txt")), fx::filled_triangle()));
  CHECK(same(SimplicialComplex::parse(read("hexagon.txt")), fx::hexagon()));
  CHECK(same(SimplicialComplex::parse(read("tetrahedron_boundary.txt")),
             fx::tetrahedron_boundary()));
  CHECK(same(SimplicialComplex::parse(read("grid2x2.txt")), fx::grid2x2()));

  auto K = fx::hexagon();
  CHECK(parse_gvf(K, read("hexagon_v1.gvf")) == fx::hexagon_v1(K));
  CHECK(parse_gvf(K, read("hexagon_v2.gvf")) == fx::hexagon_v2(K));
}

TEST_CASE("matrix dump format") {
  auto K = fx::edge();
  std::vector<Mat> D{K.boundary_matrix(0), K.boundary_matrix(1)};
  auto dump = dump_boundary_matrices(D);
  CHECK(dump.find("dim 0: rows=0, cols=2") != std::string::npos);
  CHECK(dump.find("dim 1: rows=2, cols=1") != std::string::npos);
  CHECK(dump.find("-1") != std::string::npos);
}
