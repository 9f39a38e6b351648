#ifndef PTDIRAC_ERRORS_HPP
#define PTDIRAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ptdirac {

enum class errc {
    none,
    non_convergent,
    pole_at_c,
    overflow,
    pole_at_origin,
    pole_on_contour,
    complex_branch,
    divergent_limit,
    exponent_singular,
    invalid_kappa,
    no_root_found,
    grid_too_coarse,
    not_converged,
    no_eigenvalue,
    invalid_argument,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }

  private:
    errc code_;
};

}  // namespace ptdirac

#endif
