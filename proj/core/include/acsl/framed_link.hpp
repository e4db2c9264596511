#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace acsl {

/// Dense square integer matrix, row-major. Not required to be symmetric so
/// that malformed input can be represented and rejected by validate().
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::size_t size() const noexcept { return n_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  bool is_symmetric() const noexcept;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> data_;
};

enum class Role { observed, surgery };

/// Linking data of an oriented, framed, coloured link in S^3.
///
/// linking(i, j) for i != j is lk(C_i, C_j); linking(j, j) is the framing
/// self-linking lk(C_j, C_jf), which for surgery components is the integer
/// surgery coefficient. Charges of surgery components are never read by the
/// evaluators.
struct FramedLink {
  IntMatrix linking;
  std::vector<std::int64_t> charges;
  std::vector<Role> roles;
  std::vector<std::string> names;

  std::size_t size() const noexcept { return linking.size(); }

  bool is_observed(std::size_t j) const { return roles.at(j) == Role::observed; }
  bool is_surgery(std::size_t j) const { return roles.at(j) == Role::surgery; }
  std::size_t surgery_count() const noexcept;
  std::size_t observed_count() const noexcept;

  friend bool operator==(const FramedLink&, const FramedLink&) = default;
};

/// All-observed link with default names C1..Cn.
FramedLink make_link(IntMatrix linking, std::vector<std::int64_t> charges);

/// Checks every FramedLink invariant. Throws Error(invalid_link) on hard
/// violations; returns human-readable warnings (surgery components carrying
/// a nonzero charge).
std::vector<std::string> validate(const FramedLink& link);

/// Appends a component. `links_to_existing` holds lk with each current
/// component in order.
void append_component(FramedLink& link, const std::vector<std::int64_t>& links_to_existing,
                      std::int64_t framing, std::int64_t charge, Role role, std::string name);

FramedLink remove_component(const FramedLink& link, std::size_t j);

std::string default_name(Role role, std::size_t index);

}  // namespace acsl
