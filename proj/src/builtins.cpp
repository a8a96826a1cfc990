#include "clt/builtins.hpp"

#include <charconv>

#include "clt/constructions.hpp"

namespace clt {

namespace {

Permutation one_based(std::initializer_list<std::uint64_t> images) {
  return Permutation::from_one_based(std::vector<std::uint64_t>(images));
}

// SL(2,3) acting on the 8 nonzero vectors of F_3^2, generated by the two
// elementary transvections.
PermGroup sl23() {
  struct Vec {
    unsigned x, y;
  };
  std::vector<Vec> points;
  for (unsigned x = 0; x < 3; ++x)
    for (unsigned y = 0; y < 3; ++y)
      if (x || y) points.push_back({x, y});
  auto point_index = [&](unsigned x, unsigned y) -> std::uint32_t {
    for (std::uint32_t i = 0; i < points.size(); ++i)
      if (points[i].x == x && points[i].y == y) return i;
    throw internal_error("vector out of range");
  };
  auto matrix_perm = [&](unsigned m00, unsigned m01, unsigned m10, unsigned m11) {
    std::vector<std::uint32_t> images(points.size());
    for (std::uint32_t i = 0; i < points.size(); ++i) {
      const unsigned x = (m00 * points[i].x + m01 * points[i].y) % 3;
      const unsigned y = (m10 * points[i].x + m11 * points[i].y) % 3;
      images[i] = point_index(x, y);
    }
    return Permutation(std::move(images));
  };
  PermGroup g(8, {matrix_perm(1, 1, 0, 1), matrix_perm(1, 0, 1, 1)});
  if (g.order() != 24) throw internal_error("SL(2,3) should have order 24");
  return g;
}

std::vector<std::uint64_t> parse_params(const std::string& name) {
  std::vector<std::uint64_t> out;
  std::size_t at = name.find(':');
  while (at != std::string::npos) {
    const std::size_t next = name.find(':', at + 1);
    const std::string token =
        name.substr(at + 1, next == std::string::npos ? next : next - at - 1);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw domain_error("bad parameter '" + token + "' in builtin '" + name + "'");
    out.push_back(value);
    at = next;
  }
  return out;
}

}  // namespace

PermGroup builtin_group(const std::string& name) {
  if (name == "A4") return PermGroup(4, {one_based({2, 1, 4, 3}), one_based({2, 3, 1, 4})});
  if (name == "V4") return PermGroup(4, {one_based({2, 1, 4, 3}), one_based({3, 4, 1, 2})});
  if (name == "Q8")
    return PermGroup(8, {one_based({3, 4, 2, 1, 8, 7, 5, 6}), one_based({5, 6, 7, 8, 2, 1, 4, 3})});
  if (name == "SL23") return sl23();
  if (name == "S3") return symmetric_group(3);
  if (name == "S4") return symmetric_group(4);
  if (name == "S5") return symmetric_group(5);
  if (name == "S6") return symmetric_group(6);

  const auto params = parse_params(name);
  const std::string head = name.substr(0, name.find(':'));
  if (head == "agl" && params.size() == 2)
    return agl1(static_cast<unsigned>(params[0]), static_cast<unsigned>(params[1]));
  if (head == "cyclic" && params.size() == 1) return cyclic_group(params[0]);
  if (head == "gpqn" && params.size() == 3)
    return g_pqn(params[0], params[1], static_cast<unsigned>(params[2]));
  if (head == "sym" && params.size() == 1)
    return symmetric_group(static_cast<unsigned>(params[0]));

  std::string known;
  for (const auto& n : builtin_names()) known += (known.empty() ? "" : ", ") + n;
  throw domain_error("unknown builtin '" + name + "'; expected one of: " + known);
}

std::vector<std::string> builtin_names() {
  return {"A4",  "S3",       "S4",       "S5",         "S6",   "SL23",
          "V4",  "Q8",       "agl:p:m",  "cyclic:n",   "gpqn:p:q:n", "sym:n"};
}

}  // namespace clt
