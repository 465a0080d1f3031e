#include <doctest.h>

#include <cstdio>
#include <string>

#include "agdistill/decoder.hpp"
#include "agdistill/manifest.hpp"

using namespace agd;

namespace {
ConstructedCode small_instance() {
  Curve C = Curve::rational(Field::make(5));
  return construct(C, 4, 1, 1);
}

struct TempFile {
  std::string path;
  explicit TempFile(const char* name) : path(std::string("/tmp/") + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};
}  // namespace

TEST_CASE("manifest roundtrip is byte-identical") {
  ConstructedCode code = small_instance();
  ArtifactManifest man = make_manifest(code, 2, 2);
  const std::string text = manifest_to_json(man);
  ArtifactManifest back = manifest_from_json(text);
  CHECK(manifest_to_json(back) == text);
  CHECK(back.curve == "rational:s=5");
  CHECK(back.a == 4);
  CHECK(back.k == 1);
  CHECK(back.t == 2);
  CHECK(back.degA1 == 2);
  CHECK(back.rows.size() == 5);
  CHECK(back.w.size() == 31);
}

TEST_CASE("digest tampering is detected") {
  ConstructedCode code = small_instance();
  std::string text = manifest_to_json(make_manifest(code, 2, 2));
  const auto pos = text.find("\"rows\"");
  REQUIRE(pos != std::string::npos);
  // flip one payload hex digit
  auto digit = text.find_first_of("0123456789abcdef", pos + 10);
  text[digit] = text[digit] == '0' ? '1' : '0';
  CHECK_THROWS(manifest_from_json(text));
}

TEST_CASE("save/load: plain and gzip containers") {
  ConstructedCode code = small_instance();
  ArtifactManifest man = make_manifest(code, 2, 2);
  TempFile plain("agd_test_manifest.json");
  TempFile packed("agd_test_manifest.json.gz");
  save_manifest(man, plain.path, false);
  save_manifest(man, packed.path, true);
  ArtifactManifest a = load_manifest(plain.path);
  ArtifactManifest b = load_manifest(packed.path);
  CHECK(manifest_to_json(a) == manifest_to_json(man));
  CHECK(manifest_to_json(b) == manifest_to_json(man));
  CHECK_THROWS(load_manifest("/tmp/agd_no_such_file.json"));
}

TEST_CASE("restore_code rebuilds a working instance") {
  ConstructedCode code = small_instance();
  ArtifactManifest man = make_manifest(code, 2, 2);
  ConstructedCode back = restore_code(manifest_from_json(manifest_to_json(man)));
  CHECK(back.T.rows.a == code.T.rows.a);
  CHECK(back.T.w == code.T.w);
  CHECK(back.T.sigma == code.T.sigma);
  CHECK(back.T.tau == code.T.tau);
  CHECK(back.kept_places.size() == code.kept_places.size());
  for (std::size_t i = 0; i < back.kept_places.size(); ++i) {
    CHECK(back.kept_places[i].x == code.kept_places[i].x);
    CHECK(back.kept_places[i].y == code.kept_places[i].y);
  }
  CHECK(is_triorthogonal(back.T, VerifyMode{true, 0, 0}).ok);
  // the restored instance supports decoding
  DecoderConfig cfg = build_decoder(back, man.t, man.degA1);
  std::vector<fe> e(back.T.n, 0);
  e[3] = 5;
  DecodeResult r = decode(cfg, syndrome(back.T, e));
  CHECK(r.matched);
  CHECK(r.e_hat == e);
}
