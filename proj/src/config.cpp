#include "adm/config.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

#include "adm/errors.hpp"

namespace adm {

namespace {

template <class T>
void read_env(const char* name, T& field) {
  const char* raw = std::getenv(name);
  if (raw == nullptr) return;
  const std::string_view text(raw);
  T value{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size())
    throw Error(std::string("malformed value for ") + name + ": '" + raw + "'");
  field = value;
}

}  // namespace

void Config::check() const {
  if (enumeration_cap == 0 || budget == 0 || free_limits.element_cap == 0 || product_cap == 0 ||
      !(free_limits.product_cap > 0))
    throw Error("caps and budget must be positive");
  if (sizes_min == 0 || sizes_min > sizes_max) throw Error("bad size window");
  if (sizes_max > enumeration_cap) throw Error("size window exceeds the enumeration cap");
}

void apply_environment(Config& c) {
  read_env("ADM_ENUM_CAP", c.enumeration_cap);
  read_env("ADM_BUDGET", c.budget);
  read_env("ADM_FREE_CAP", c.free_limits.element_cap);
  read_env("ADM_PRODUCT_CAP", c.product_cap);
  read_env("ADM_SEED", c.seed);
}

}  // namespace adm
