// errors.hpp — error taxonomy shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace inertia {

enum class errc {
  invalid_spec,
  out_of_range,
  disconnected,
  unsupported_graph,
  size_limit,
  not_symmetric,
  singular_s,
  singular_leading_block,
  bad_ordering,
  odd_length,
  no_convergence,
  non_real_spectrum,
  index_out_of_range,
  not_deg2_cut,
  precondition_violated,
  bad_k,
  not_unicyclic,
  parse_error,
  io_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_spec: return "InvalidSpec";
    case errc::out_of_range: return "OutOfRange";
    case errc::disconnected: return "Disconnected";
    case errc::unsupported_graph: return "UnsupportedGraph";
    case errc::size_limit: return "SizeLimit";
    case errc::not_symmetric: return "NotSymmetric";
    case errc::singular_s: return "SingularS";
    case errc::singular_leading_block: return "SingularLeadingBlock";
    case errc::bad_ordering: return "BadOrdering";
    case errc::odd_length: return "OddLength";
    case errc::no_convergence: return "NoConvergence";
    case errc::non_real_spectrum: return "NonRealSpectrum";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::not_deg2_cut: return "NotDeg2Cut";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::bad_k: return "BadK";
    case errc::not_unicyclic: return "NotUnicyclic";
    case errc::parse_error: return "ParseError";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, errc code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace inertia
