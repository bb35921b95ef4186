#include <atlas/error.hpp>
#include <atlas/parse.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>

namespace atlas {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view text) {
  const auto t = trim(text);
  const bool digits = !t.empty() && std::all_of(t.begin() + (t.front() == '-'), t.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
  if (!digits || t == "-")
    throw Error(ErrorKind::InvalidInput, "not an integer: '" + std::string(text) + "'");
  return Integer(std::string(t));
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::vector<Integer> parse_integer_list(std::string_view text) {
  std::vector<Integer> out;
  for (auto part : split(trim(text), ',')) out.push_back(parse_integer(part));
  return out;
}

std::pair<long, long> parse_range(std::string_view text) {
  const auto t = trim(text);
  auto to_long = [&](std::string_view s) {
    const auto z = parse_integer(s);
    if (!z.fits_slong_p()) throw Error(ErrorKind::InvalidInput, "range bound too large");
    return z.get_si();
  };
  const auto dots = t.find("..");
  if (dots == std::string_view::npos) {
    const long v = to_long(t);
    return {v, v};
  }
  const long lo = to_long(t.substr(0, dots));
  const long hi = to_long(t.substr(dots + 2));
  if (lo > hi) throw Error(ErrorKind::InvalidInput, "empty range '" + std::string(text) + "'");
  return {lo, hi};
}

std::string LinkDescriptor::key() const {
  return exponents ? exponents->key() : weights.key();
}

LinkDescriptor parse_link(std::string_view text) {
  const auto t = trim(text);
  const auto colon = t.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorKind::InvalidInput, "link must start with bp:, w: or mono:");
  const auto kind = t.substr(0, colon);
  const auto body = t.substr(colon + 1);

  if (kind == "bp") {
    BPExponents a(parse_integer_list(body));
    auto ws = bp_link(a);
    return {std::move(a), std::nullopt, std::move(ws)};
  }
  if (kind == "w") {
    const auto at = body.find('@');
    if (at == std::string_view::npos)
      throw Error(ErrorKind::InvalidInput, "weight system needs '@degree'");
    WeightSystem ws(parse_integer_list(body.substr(0, at)), parse_integer(body.substr(at + 1)));
    return {std::nullopt, std::nullopt, std::move(ws)};
  }
  if (kind == "mono") {
    auto b = trim(body);
    if (b.size() < 2 || b.front() != '[' || b.back() != ']')
      throw Error(ErrorKind::InvalidInput, "monomial matrix must be bracketed: mono:[..;..]");
    std::vector<std::vector<Integer>> rows;
    for (auto row : split(b.substr(1, b.size() - 2), ';')) rows.push_back(parse_integer_list(row));
    MonomialMatrix m(std::move(rows));
    auto ws = solve_weights(m);
    return {std::nullopt, std::move(m), std::move(ws)};
  }
  throw Error(ErrorKind::InvalidInput, "unknown link kind '" + std::string(kind) + "'");
}

}  // namespace atlas
