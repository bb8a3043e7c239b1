#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hocalc {

// A finite category with explicit composition table. Identity arrows are
// part of the arrow list (named "id_<object>" when built from JSON).
class FiniteCategory {
 public:
  struct Arrow {
    std::string name;
    std::uint32_t src;
    std::uint32_t dst;
  };

  FiniteCategory() = default;

  std::uint32_t add_object(std::string name);  // also adds its identity
  std::uint32_t add_arrow(std::string name, std::uint32_t src, std::uint32_t dst);
  // result = second o first
  void set_composite(std::uint32_t first, std::uint32_t second, std::uint32_t result);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::string& object_name(std::uint32_t x) const { return objects_[x]; }
  const Arrow& arrow(std::uint32_t a) const { return arrows_[a]; }
  std::uint32_t identity(std::uint32_t x) const { return identities_[x]; }
  bool is_identity(std::uint32_t a) const { return identities_[arrows_[a].src] == a; }

  // second o first; requires dst(first) == src(second).
  std::uint32_t compose(std::uint32_t first, std::uint32_t second) const;

  std::optional<std::uint32_t> find_object(const std::string& name) const;
  std::optional<std::uint32_t> find_arrow(const std::string& name) const;

  // Totality of composition on composable pairs, identity and associativity
  // laws. Throws ValidationError.
  void validate() const;

  std::string name;

 private:
  static constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<std::uint32_t> identities_;
  // [first][second]
  std::vector<std::vector<std::uint32_t>> table_;
};

}  // namespace hocalc
