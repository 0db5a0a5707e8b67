#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "jsonio.hpp"
#include "seifert/cli.hpp"

namespace seifert::cli {

namespace {

using detail::json;

unsigned long parse_index(const json& x, const char* name) {
  if (!x.is_number_integer() || (!x.is_number_unsigned() && x.get<std::int64_t>() < 0))
    throw ParseError(std::string(name) + " must be a nonnegative integer");
  return x.get<unsigned long>();
}

}  // namespace

unsigned KnotFile::handle_index() const {
  if (k) return static_cast<unsigned>(*k);
  if (!n) throw Error(ErrorKind::MissingMatrix, "file gives neither n nor k");
  return static_cast<unsigned>((*n - 1) / 2);
}

KnotFile parse_knot_file(const std::string& text, bool index_required) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("knot file must be a JSON object");
  for (const auto& item : doc.items())
    if (item.key() != "n" && item.key() != "k" && item.key() != "matrix")
      throw ParseError("unknown field \"" + item.key() + "\"");

  KnotFile out;
  if (doc.contains("n")) out.n = parse_index(doc["n"], "n");
  if (doc.contains("k")) out.k = parse_index(doc["k"], "k");
  if (out.n && out.k) throw ParseError("give exactly one of n and k, not both");
  if (index_required && !out.n && !out.k) throw ParseError("missing field n or k");
  if (out.n && (*out.n == 0 || *out.n % 2 == 0))
    throw ParseError("n must be odd and positive, got " + std::to_string(*out.n));

  if (!doc.contains("matrix")) throw ParseError("missing field matrix");
  out.matrix = detail::json_to_matrix(doc["matrix"], "matrix");
  return out;
}

std::string format_knot_file(const KnotFile& file) {
  std::ostringstream os;
  os << "{\n";
  if (file.n)
    os << "  \"n\": " << *file.n << ",\n";
  else if (file.k)
    os << "  \"k\": " << *file.k << ",\n";
  os << "  \"matrix\": [";
  const std::size_t dim = file.matrix.dim();
  for (std::size_t r = 0; r < dim; ++r) {
    os << (r == 0 ? "\n    [" : ",\n    [");
    for (std::size_t c = 0; c < dim; ++c) {
      if (c) os << ", ";
      const Integer& x = file.matrix(r, c);
      if (x.fits_slong_p())
        os << x.get_str();
      else
        os << '"' << x.get_str() << '"';
    }
    os << "]";
  }
  os << (dim == 0 ? "]\n" : "\n  ]\n");
  os << "}\n";
  return os.str();
}

SeifertKnot to_knot(const KnotFile& file) { return validate(file.handle_index(), file.matrix); }

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) os << std::setw(2) << static_cast<int>(digest[i]);
  return os.str();
}

}  // namespace seifert::cli
