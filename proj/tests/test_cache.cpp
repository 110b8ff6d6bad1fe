#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "mfgap/cache.h"

using namespace mfgap;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("mfgap_cache_test_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("round trip") {
  fs::path d = scratch_dir("roundtrip");
  SpaceBasis b = msengine::qexpansion_basis(19, 16, 60);
  fs::path f = d / cache::file_name(19, 16, 60);
  cache::write_basis(b, f);
  CHECK(fs::exists(f.string() + ".json"));
  SpaceBasis back = cache::read_basis(f);
  CHECK(back == b);
  std::ifstream in(f);
  std::string header;
  std::getline(in, header);
  CHECK(header == "MFBASIS v1 19 16 60 24");

  SpaceBasis empty = msengine::qexpansion_basis(4, 4, 20);
  cache::write_basis(empty, d / "empty.mfb");
  CHECK(cache::read_basis(d / "empty.mfb") == empty);
}

TEST_CASE("malformed files are rejected") {
  fs::path d = scratch_dir("bad");
  SpaceBasis b = msengine::qexpansion_basis(11, 2, 20);
  cache::write_basis(b, d / "a.mfb");
  {
    std::ofstream out(d / "a.mfb");
    out << "MFBASIS v1 11 2 20 2\n";
    for (int i = 0; i < 20; ++i) out << (i ? " " : "") << b.rows[0][i].get_str();
    out << '\n';
  }
  CHECK_THROWS_AS(cache::read_basis(d / "a.mfb"), std::runtime_error);
  {
    std::ofstream out(d / "b.mfb");
    out << "MFBASIS v2 11 2 20 1\n";
  }
  CHECK_THROWS_AS(cache::read_basis(d / "b.mfb"), std::runtime_error);
  {
    std::ofstream out(d / "c.mfb");
    out << "MFBASIS v1 11 2 3 1\n1 2\n";
  }
  CHECK_THROWS_AS(cache::read_basis(d / "c.mfb"), std::runtime_error);
}

TEST_CASE("load or build") {
  fs::path d = scratch_dir("load");
  bool hit = true;
  SpaceBasis a = cache::load_or_build(19, 16, 80, d, {}, &hit);
  CHECK_FALSE(hit);
  CHECK(fs::exists(d / cache::file_name(19, 16, 80)));
  SpaceBasis b = cache::load_or_build(19, 16, 80, d, {}, &hit);
  CHECK(hit);
  CHECK(a == b);
  SpaceBasis c = cache::load_or_build(19, 16, 50, d, {}, &hit);
  CHECK(hit);
  CHECK(c == msengine::qexpansion_basis(19, 16, 50));
}

TEST_CASE("environment override") {
  fs::path d = scratch_dir("env");
  ::setenv("MFCACHE", d.c_str(), 1);
  CHECK(cache::resolve_dir("/somewhere/else") == d);
  ::unsetenv("MFCACHE");
  CHECK(cache::resolve_dir("/somewhere/else") == fs::path("/somewhere/else"));
  CHECK_FALSE(cache::resolve_dir("").has_value());
}
