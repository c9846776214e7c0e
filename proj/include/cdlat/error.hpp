#pragma once

#include <stdexcept>
#include <string>

namespace cdlat {

enum class errc {
    invalid_argument,
    mismatched_groups,
    enumeration_bound,
    subgroup_guard,
    collect_budget,
    not_normal,
    not_subgroup,
    bad_certificate,
    infeasible,
    io,
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace cdlat
