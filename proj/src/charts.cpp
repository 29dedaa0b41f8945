#include "lamina/charts.hpp"

#include <sstream>

#include "lamina/errors.hpp"

namespace lamina {

std::string to_string(const FaceKey& k) {
  std::ostringstream out;
  out << "face:" << k.tri[0] << "-" << k.tri[1] << "-" << k.tri[2] << ":" << k.ijk[0] << "-"
      << k.ijk[1] << "-" << k.ijk[2];
  return out.str();
}

std::string to_string(const EdgeKey& k) {
  std::ostringstream out;
  out << "edge:" << k.edge[0] << "-" << k.edge[1] << ":" << k.ij[0] << "-" << k.ij[1];
  return out.str();
}

namespace {

std::vector<int> split_ints(const std::string& s, char sep) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) {
    try {
      out.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw ParseError("bad integer in chart key: " + s);
    }
  }
  return out;
}

std::array<std::string, 3> split_key(const std::string& s, const std::string& tag) {
  std::array<std::string, 3> parts;
  std::stringstream in(s);
  for (auto& p : parts) {
    if (!std::getline(in, p, ':')) throw ParseError("bad chart key: " + s);
  }
  if (parts[0] != tag) throw ParseError("expected " + tag + " key, got: " + s);
  return parts;
}

}  // namespace

FaceKey face_key_from_string(const std::string& s) {
  const auto parts = split_key(s, "face");
  const auto tri = split_ints(parts[1], '-');
  const auto ijk = split_ints(parts[2], '-');
  if (tri.size() != 3 || ijk.size() != 3) throw ParseError("bad face key: " + s);
  return FaceKey{{tri[0], tri[1], tri[2]}, {ijk[0], ijk[1], ijk[2]}};
}

EdgeKey edge_key_from_string(const std::string& s) {
  const auto parts = split_key(s, "edge");
  const auto e = split_ints(parts[1], '-');
  const auto ij = split_ints(parts[2], '-');
  if (e.size() != 2 || ij.size() != 2) throw ParseError("bad edge key: " + s);
  return EdgeKey{{e[0], e[1]}, {ij[0], ij[1]}};
}

}  // namespace lamina
