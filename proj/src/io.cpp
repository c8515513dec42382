#include "lfsrcrt/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "lfsrcrt/error.hpp"

namespace lfsrcrt {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_u64(std::string_view s, std::size_t line) {
  s = trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("expected an integer, got '" + std::string(s) + "'", line);
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

}  // namespace

PeriodicSequence SequenceFile::one_period() const {
  if (period == 0) throw Error("period must be at least 1");
  if (bits.size() < period) throw Error("payload shorter than the declared period");
  for (std::size_t t = period; t < bits.size(); ++t) {
    if (bits[t] != bits[t % period]) throw Error("payload does not repeat with the declared period");
  }
  return PeriodicSequence(BitVector(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(period)));
}

SequenceFile read_sequence(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("missing header", 1);
  std::istringstream hs(header);
  std::string keyword;
  std::string count;
  hs >> keyword >> count;
  if (keyword != "period") throw ParseError("expected 'period <n>'", 1);
  SequenceFile file;
  file.period = parse_u64(count, 1);
  std::string rest;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    try {
      BitVector b = parse_bits(line);
      file.bits.insert(file.bits.end(), b.begin(), b.end());
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return file;
}

void write_sequence(std::ostream& out, std::uint64_t period, std::span<const std::uint8_t> bits) {
  out << "period " << period << '\n' << format_bits(bits) << '\n';
}

void write_spectrum_csv(std::ostream& out, const Spectrum& spec) {
  const GaloisField& f = *spec.field();
  out << "n," << spec.size() << ",modulus," << f.modulus().to_hex();
  if (!spec.base().poly().is_zero() && spec.base().repr() != f.x().repr()) {
    out << ",base," << spec.base().poly().to_hex();
  }
  out << '\n';
  const SubgroupLog& logs = f.subgroup_log(spec.base().repr(), spec.size());
  for (std::size_t k = 0; k < spec.size(); ++k) {
    const std::uint64_t v = spec.raw()[k];
    if (v == 0) continue;
    out << k << ',';
    if (logs.contains(v)) {
      out << logs.log(v);
    } else {
      out << "0x" << BinaryPoly(v).to_hex();
    }
    out << '\n';
  }
}

Spectrum read_spectrum_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("missing header", 1);
  const auto head = split(line, ',');
  if (head.size() < 4 || head[0] != "n" || head[2] != "modulus" || (head.size() != 4 && head.size() != 6) ||
      (head.size() == 6 && head[4] != "base")) {
    throw ParseError("expected 'n,<n>,modulus,<hex>[,base,<hex>]'", 1);
  }
  const std::uint64_t n = parse_u64(head[1], 1);
  const FieldPtr field = make_field(BinaryPoly::parse(head[3]));
  const FieldElt base = head.size() == 6 ? field->element(BinaryPoly::parse(head[5])) : field->x();
  if (!has_order(base, n)) throw ParseError("base order != period", 1);
  std::vector<std::uint64_t> values(n, 0);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto cols = split(line, ',');
    if (cols.size() != 2) throw ParseError("expected 'k,<exponent>'", lineno);
    const std::uint64_t k = parse_u64(cols[0], lineno);
    if (k >= n) throw ParseError("index out of range", lineno);
    if (cols[1].starts_with("0x") || cols[1].starts_with("0X")) {
      values[k] = field->element(BinaryPoly::parse(cols[1])).repr();
    } else {
      values[k] = base.pow(static_cast<std::int64_t>(parse_u64(cols[1], lineno) % n)).repr();
    }
  }
  return Spectrum(base, std::move(values));
}

GeneratorSpec read_generator_spec(std::istream& in) {
  std::vector<LfsrConfig> lfsrs;
  std::optional<std::string> anf;
  std::size_t anf_line = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::istringstream ls{std::string(body)};
    std::string keyword;
    ls >> keyword;
    try {
      if (keyword == "lfsr") {
        std::string poly;
        std::string init;
        if (!(ls >> poly >> init)) throw ParseError("expected 'lfsr <poly-hex> <init-bits>'");
        lfsrs.emplace_back(BinaryPoly::parse(poly), parse_bits(init));
      } else if (keyword == "anf") {
        if (anf) throw ParseError("duplicate anf line");
        std::string masks;
        std::getline(ls, masks);
        anf = std::string(trim(masks));
        anf_line = lineno;
      } else {
        throw ParseError("unknown keyword '" + keyword + "'");
      }
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    } catch (const Error& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (lfsrs.empty()) throw ParseError("no lfsr lines");
  try {
    AnfFunction f = anf ? AnfFunction::parse(lfsrs.size(), *anf) : AnfFunction::product(lfsrs.size());
    return GeneratorSpec(std::move(lfsrs), std::move(f));
  } catch (const Error& e) {
    throw ParseError(e.what(), anf_line);
  }
}

void write_generator_spec(std::ostream& out, const GeneratorSpec& spec) {
  for (const auto& l : spec.lfsrs()) out << "lfsr " << l.feedback().to_hex() << ' ' << format_bits(l.init()) << '\n';
  out << "anf ";
  const auto& mons = spec.function().monomials();
  for (std::size_t i = 0; i < mons.size(); ++i) {
    out << (i ? "," : "") << BinaryPoly(mons[i]).to_hex();
  }
  out << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace lfsrcrt
