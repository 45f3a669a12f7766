#include "usctec/errors.hpp"

#include <sstream>

namespace usctec {

namespace {

std::string join_diagnostics(const std::vector<std::string>& diags) {
    std::ostringstream os;
    os << "invalid model";
    for (const auto& d : diags) os << "; " << d;
    return os.str();
}

std::string not_decodable_message(std::size_t block, std::size_t group, std::size_t available,
                                  std::size_t needed) {
    std::ostringstream os;
    os << "block " << block + 1 << " group " << group + 1 << " not decodable: " << available
       << " results available, " << needed << " needed";
    return os.str();
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> diagnostics)
    : Error(join_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {}

NotDecodableError::NotDecodableError(std::size_t block, std::size_t group, std::size_t available,
                                     std::size_t needed)
    : Error(not_decodable_message(block, group, available, needed)), block_(block), group_(group) {}

}  // namespace usctec
