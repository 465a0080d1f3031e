#include "agdistill/manifest.hpp"

#include <zlib.h>

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "agdistill/selfdual.hpp"

namespace agd {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string u32_hex(std::uint32_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string digest_hex(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

ordered_json body_json(const ArtifactManifest& m) {
  ordered_json j;
  j["format_version"] = m.format_version;
  j["field"] = {{"s", m.field_s}, {"modulus", m.field_modulus}};
  j["basis"] = m.basis;
  j["curve"] = m.curve;
  j["parameters"] = {{"a", m.a}, {"k", m.k}, {"t", m.t}, {"degA1", m.degA1}};
  j["place_permutation"] = m.place_permutation;
  j["col_perm"] = m.col_perm;
  j["w"] = m.w;
  j["sigma"] = m.sigma;
  j["tau"] = m.tau;
  j["rows"] = m.rows;
  j["seed"] = m.seed;
  return j;
}

std::vector<std::string> hex_list(const Field& F, const std::vector<fe>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (fe x : v) out.push_back(F.to_hex(x));
  return out;
}

std::vector<fe> unhex_list(const Field& F,
                           const std::vector<std::string>& v) {
  std::vector<fe> out;
  out.reserve(v.size());
  for (const auto& h : v) out.push_back(F.from_hex(h));
  return out;
}

}  // namespace

ArtifactManifest make_manifest(const ConstructedCode& code, unsigned t,
                               unsigned degA1) {
  const TriorthogonalMatrix& T = code.T;
  const Field& F = *T.field;
  ArtifactManifest m;
  m.field_s = F.s();
  m.field_modulus = u32_hex(F.modulus());
  SelfDualBasis basis =
      (F.s() == 10 && F.modulus() == Field::default_modulus(10))
          ? paper_basis_s10()
          : find_self_dual_basis(T.field, T.prov.seed);
  m.basis = hex_list(F, basis.alphas);
  m.curve = T.prov.curve_desc;
  m.a = T.prov.a;
  m.k = T.prov.k;
  m.t = t;
  m.degA1 = degA1;
  m.place_permutation = T.prov.place_ids;
  m.col_perm = T.prov.col_perm;
  m.w = hex_list(F, T.w);
  m.sigma = hex_list(F, T.sigma);
  m.tau = hex_list(F, T.tau);
  m.rows.reserve(T.m);
  for (std::size_t r = 0; r < T.m; ++r) {
    std::string row;
    row.reserve(T.n * F.hex_width());
    for (std::size_t c = 0; c < T.n; ++c)
      row += F.to_hex(T.rows.at(r, c));
    m.rows.push_back(std::move(row));
  }
  m.seed = T.prov.seed;
  return m;
}

std::string manifest_to_json(const ArtifactManifest& man) {
  ordered_json j = body_json(man);
  const std::uint64_t h = fnv1a(j.dump(2));
  j["digest"] = digest_hex(h);
  return j.dump(2) + "\n";
}

ArtifactManifest manifest_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  ArtifactManifest m;
  m.format_version = j.at("format_version").get<unsigned>();
  m.field_s = j.at("field").at("s").get<unsigned>();
  m.field_modulus = j.at("field").at("modulus").get<std::string>();
  m.basis = j.at("basis").get<std::vector<std::string>>();
  m.curve = j.at("curve").get<std::string>();
  const auto& p = j.at("parameters");
  m.a = p.at("a").get<unsigned>();
  m.k = p.at("k").get<unsigned>();
  m.t = p.at("t").get<unsigned>();
  m.degA1 = p.at("degA1").get<unsigned>();
  m.place_permutation =
      j.at("place_permutation").get<std::vector<std::uint32_t>>();
  m.col_perm = j.at("col_perm").get<std::vector<std::uint32_t>>();
  m.w = j.at("w").get<std::vector<std::string>>();
  m.sigma = j.at("sigma").get<std::vector<std::string>>();
  m.tau = j.at("tau").get<std::vector<std::string>>();
  m.rows = j.at("rows").get<std::vector<std::string>>();
  m.seed = j.at("seed").get<std::uint64_t>();
  m.digest = j.at("digest").get<std::string>();
  const std::uint64_t h = fnv1a(body_json(m).dump(2));
  if (digest_hex(h) != m.digest)
    throw std::runtime_error("manifest digest mismatch");
  return m;
}

void save_manifest(const ArtifactManifest& man, const std::string& path,
                   bool gzip) {
  const std::string text = manifest_to_json(man);
  if (gzip) {
    gzFile gz = gzopen(path.c_str(), "wb");
    if (!gz) throw std::runtime_error("cannot open " + path);
    std::size_t off = 0;
    while (off < text.size()) {
      const unsigned chunk = static_cast<unsigned>(
          std::min<std::size_t>(text.size() - off, 1u << 24));
      if (gzwrite(gz, text.data() + off, chunk) != static_cast<int>(chunk)) {
        gzclose(gz);
        throw std::runtime_error("gzip write failed: " + path);
      }
      off += chunk;
    }
    gzclose(gz);
  } else {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
  }
}

ArtifactManifest load_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string raw((std::istreambuf_iterator<char>(in)),
                  std::istreambuf_iterator<char>());
  if (raw.size() >= 2 && static_cast<unsigned char>(raw[0]) == 0x1f &&
      static_cast<unsigned char>(raw[1]) == 0x8b) {
    gzFile gz = gzopen(path.c_str(), "rb");
    if (!gz) throw std::runtime_error("cannot open " + path);
    std::string text;
    std::vector<char> buf(1 << 20);
    int got;
    while ((got = gzread(gz, buf.data(), static_cast<unsigned>(buf.size()))) >
           0)
      text.append(buf.data(), static_cast<std::size_t>(got));
    const bool bad = got < 0;
    gzclose(gz);
    if (bad) throw std::runtime_error("gzip read failed: " + path);
    raw = std::move(text);
  }
  return manifest_from_json(raw);
}

ConstructedCode restore_code(const ArtifactManifest& man) {
  Curve curve = Curve::from_descriptor(man.curve);
  const Field& F = curve.field();
  if (F.s() != man.field_s ||
      u32_hex(F.modulus()) != man.field_modulus)
    throw std::runtime_error("manifest field spec mismatch");

  ConstructedCode code{curve, {}, {}};
  TriorthogonalMatrix& T = code.T;
  T.field = curve.field_ptr();
  T.w = unhex_list(F, man.w);
  T.sigma = unhex_list(F, man.sigma);
  T.tau = unhex_list(F, man.tau);
  T.N = T.w.size();
  T.k = man.k;
  T.n = T.N - T.k;
  T.m = man.rows.size();
  if (T.sigma.size() != T.n || T.tau.size() != T.k)
    throw std::runtime_error("manifest vector sizes inconsistent");
  T.rows = Mat(T.m, T.n);
  const unsigned hw = F.hex_width();
  for (std::size_t r = 0; r < T.m; ++r) {
    const std::string& row = man.rows[r];
    if (row.size() != T.n * hw)
      throw std::runtime_error("manifest row length mismatch");
    for (std::size_t c = 0; c < T.n; ++c)
      T.rows.at(r, c) = F.from_hex(row.substr(c * hw, hw));
  }
  T.prov.curve_desc = man.curve;
  T.prov.a = man.a;
  T.prov.k = man.k;
  T.prov.seed = man.seed;
  T.prov.place_ids = man.place_permutation;
  T.prov.col_perm = man.col_perm;

  const std::vector<Place> all = curve.affine_places();
  code.kept_places.reserve(man.place_permutation.size());
  for (std::uint32_t id : man.place_permutation) {
    if (id >= all.size())
      throw std::runtime_error("manifest place id out of range");
    code.kept_places.push_back(all[id]);
  }
  if (code.kept_places.size() != T.N)
    throw std::runtime_error("manifest place count mismatch");
  return code;
}

}  // namespace agd
