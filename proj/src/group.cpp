#include "skewlab/group.hpp"

#include <cstdlib>

#include "skewlab/field.hpp" // mod_reduce

namespace skewlab {

std::string GroupElement::key() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coords_[i]);
  }
  return out;
}

GroupSpec::GroupSpec(int free_rank, std::vector<std::int64_t> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  if (free_rank_ < 0)
    fail(ErrorCode::InvalidArgument, "negative free rank");
  for (std::int64_t n : torsion_)
    if (n < 2)
      fail(ErrorCode::InvalidArgument,
           "torsion order must be at least 2, got " + std::to_string(n));
}

std::int64_t GroupSpec::order() const {
  if (!finite())
    fail(ErrorCode::InfiniteGroup, "order of a group with free rank " +
                                       std::to_string(free_rank_));
  std::int64_t n = 1;
  for (std::int64_t m : torsion_) n *= m;
  return n;
}

GroupElement GroupSpec::zero() const {
  return GroupElement(std::vector<std::int64_t>(arity(), 0));
}

bool GroupSpec::is_zero(const GroupElement& a) const {
  check_arity(a);
  for (std::int64_t c : a.coords())
    if (c != 0) return false;
  return true;
}

GroupElement GroupSpec::element(std::vector<std::int64_t> coords) const {
  if (coords.size() != arity())
    fail(ErrorCode::SpecMismatch,
         "element has " + std::to_string(coords.size()) + " coordinates, group needs " +
             std::to_string(arity()));
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    std::int64_t& c = coords[free_rank_ + i];
    c = mod_reduce(c, torsion_[i]);
  }
  return GroupElement(std::move(coords));
}

GroupElement GroupSpec::add(const GroupElement& a, const GroupElement& b) const {
  check_arity(a);
  check_arity(b);
  std::vector<std::int64_t> coords(arity());
  for (std::size_t i = 0; i < arity(); ++i)
    coords[i] = a.coords()[i] + b.coords()[i];
  return element(std::move(coords));
}

GroupElement GroupSpec::neg(const GroupElement& a) const {
  check_arity(a);
  std::vector<std::int64_t> coords(arity());
  for (std::size_t i = 0; i < arity(); ++i) coords[i] = -a.coords()[i];
  return element(std::move(coords));
}

GroupElement GroupSpec::sub(const GroupElement& a, const GroupElement& b) const {
  return add(a, neg(b));
}

std::vector<GroupElement> GroupSpec::enumerate() const {
  std::int64_t n = order(); // throws for infinite groups
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(n));
  std::vector<std::int64_t> coords(arity(), 0);
  for (;;) {
    out.emplace_back(coords);
    // odometer over torsion coordinates, least significant last so the
    // result comes out in lexicographic order
    std::size_t i = arity();
    while (i > 0) {
      --i;
      if (++coords[i] < torsion_[i]) break;
      coords[i] = 0;
      if (i == 0) return out;
    }
    if (arity() == 0) return out; // trivial group: single element
  }
}

GroupElement GroupSpec::parse_key(const std::string& key) const {
  std::vector<std::int64_t> coords;
  if (!key.empty()) {
    std::size_t pos = 0;
    while (pos <= key.size()) {
      std::size_t comma = key.find(',', pos);
      std::string part = key.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      char* end = nullptr;
      long long v = std::strtoll(part.c_str(), &end, 10);
      if (part.empty() || !end || *end != '\0')
        fail(ErrorCode::MalformedInstance, "bad group element key '" + key + "'");
      coords.push_back(v);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  if (coords.size() != arity())
    fail(ErrorCode::MalformedInstance,
         "group element key '" + key + "' has " + std::to_string(coords.size()) +
             " coordinates, group needs " + std::to_string(arity()));
  return element(std::move(coords));
}

std::string GroupSpec::describe() const {
  std::string out;
  for (int i = 0; i < free_rank_; ++i) {
    if (!out.empty()) out += " x ";
    out += "Z";
  }
  for (std::int64_t n : torsion_) {
    if (!out.empty()) out += " x ";
    out += "Z_" + std::to_string(n);
  }
  return out.empty() ? "0" : out;
}

void GroupSpec::check_arity(const GroupElement& a) const {
  if (a.arity() != arity())
    fail(ErrorCode::SpecMismatch,
         "element arity " + std::to_string(a.arity()) + " does not match group arity " +
             std::to_string(arity()));
}

} // namespace skewlab
