// SPDX-License-Identifier: Apache-2.0
#ifndef QCE_ERROR_HPP
#define QCE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qce {

enum class ErrorCode {
    zero_input,
    zero_channel_entry,
    invalid_sigma,
    invalid_argument,
    domain_error,
    degenerate_distribution,
    insufficient_data,
    config_error,
    io_error,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

} // namespace qce

#endif
