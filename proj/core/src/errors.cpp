#include "fpp/errors.hpp"

namespace fpp::detail {

void throw_domain(const std::string& where, const std::string& constraint) {
  throw DomainError(where + ": requires " + constraint);
}

}  // namespace fpp::detail
