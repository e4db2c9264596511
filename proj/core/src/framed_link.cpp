#include "acsl/framed_link.hpp"

#include <algorithm>
#include <string>

#include "acsl/errors.hpp"

namespace acsl {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : n_(rows.size()), data_(rows.size() * rows.size(), 0) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) {
      throw Error(ErrorKind::invalid_link, "IntMatrix: rows must have length " + std::to_string(n_));
    }
    std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * n_));
    ++i;
  }
}

bool IntMatrix::is_symmetric() const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

std::size_t FramedLink::surgery_count() const noexcept {
  return static_cast<std::size_t>(std::count(roles.begin(), roles.end(), Role::surgery));
}

std::size_t FramedLink::observed_count() const noexcept {
  return static_cast<std::size_t>(std::count(roles.begin(), roles.end(), Role::observed));
}

std::string default_name(Role role, std::size_t index) {
  return (role == Role::observed ? "C" : "S") + std::to_string(index + 1);
}

FramedLink make_link(IntMatrix linking, std::vector<std::int64_t> charges) {
  FramedLink link;
  const std::size_t n = linking.size();
  link.linking = std::move(linking);
  link.charges = std::move(charges);
  link.roles.assign(n, Role::observed);
  for (std::size_t j = 0; j < n; ++j) link.names.push_back(default_name(Role::observed, j));
  return link;
}

std::vector<std::string> validate(const FramedLink& link) {
  const std::size_t n = link.size();
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::invalid_link, msg); };
  if (link.charges.size() != n) {
    fail("charges has " + std::to_string(link.charges.size()) + " entries, expected " +
         std::to_string(n));
  }
  if (link.roles.size() != n) {
    fail("roles has " + std::to_string(link.roles.size()) + " entries, expected " +
         std::to_string(n));
  }
  if (link.names.size() != n) {
    fail("names has " + std::to_string(link.names.size()) + " entries, expected " +
         std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (link.linking(i, j) != link.linking(j, i)) {
        fail("linking matrix is not symmetric at (" + std::to_string(i) + "," +
             std::to_string(j) + "): " + std::to_string(link.linking(i, j)) +
             " != " + std::to_string(link.linking(j, i)));
      }
    }
  }
  std::vector<std::string> warnings;
  for (std::size_t j = 0; j < n; ++j) {
    if (link.roles[j] == Role::surgery && link.charges[j] != 0) {
      warnings.push_back("surgery component " + link.names[j] + " carries charge " +
                         std::to_string(link.charges[j]) + ", which is ignored");
    }
  }
  return warnings;
}

void append_component(FramedLink& link, const std::vector<std::int64_t>& links_to_existing,
                      std::int64_t framing, std::int64_t charge, Role role, std::string name) {
  const std::size_t n = link.size();
  if (links_to_existing.size() != n) {
    throw Error(ErrorKind::invalid_argument,
                "append_component: expected " + std::to_string(n) + " linking numbers");
  }
  IntMatrix grown(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) grown(i, j) = link.linking(i, j);
    grown(i, n) = links_to_existing[i];
    grown(n, i) = links_to_existing[i];
  }
  grown(n, n) = framing;
  link.linking = std::move(grown);
  link.charges.push_back(charge);
  link.roles.push_back(role);
  link.names.push_back(std::move(name));
}

FramedLink remove_component(const FramedLink& link, std::size_t j) {
  const std::size_t n = link.size();
  if (j >= n) {
    throw Error(ErrorKind::index, "component index " + std::to_string(j) + " out of range");
  }
  FramedLink out;
  out.linking = IntMatrix(n - 1);
  for (std::size_t r = 0, rr = 0; r < n; ++r) {
    if (r == j) continue;
    for (std::size_t c = 0, cc = 0; c < n; ++c) {
      if (c == j) continue;
      out.linking(rr, cc++) = link.linking(r, c);
    }
    out.charges.push_back(link.charges[r]);
    out.roles.push_back(link.roles[r]);
    out.names.push_back(link.names[r]);
    ++rr;
  }
  return out;
}

}  // namespace acsl
