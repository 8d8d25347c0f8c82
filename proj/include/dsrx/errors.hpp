#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dsrx {

// Malformed graph6 input; offset is the byte position of the offending
// character within the line.
class graph6_error : public std::runtime_error {
 public:
  graph6_error(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class unsupported_size_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Distance matrices exist only for connected graphs; names one pair of
// vertices no path joins.
class disconnected_error : public std::runtime_error {
 public:
  disconnected_error(int u, int v)
      : std::runtime_error("graph is disconnected: no path joins vertex " +
                           std::to_string(u) + " and vertex " + std::to_string(v)),
        u_(u), v_(v) {}
  int u() const { return u_; }
  int v() const { return v_; }

 private:
  int u_, v_;
};

// A partition handed to verify_equitable is not equitable; names the first
// violating (part, vertex) found.
class not_equitable_error : public std::runtime_error {
 public:
  not_equitable_error(int part, int vertex, const std::string& detail)
      : std::runtime_error("partition is not equitable: vertex " +
                           std::to_string(vertex) + " in part " +
                           std::to_string(part) + " " + detail),
        part_(part), vertex_(vertex) {}
  int part() const { return part_; }
  int vertex() const { return vertex_; }

 private:
  int part_, vertex_;
};

// Power iteration hit its iteration cap before the residual dropped below
// tol; carries the last estimate for diagnostics.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(double estimate, double residual, long long iterations)
      : std::runtime_error("power iteration did not converge after " +
                           std::to_string(iterations) +
                           " iterations (last estimate " + std::to_string(estimate) +
                           ", residual " + std::to_string(residual) + ")"),
        estimate_(estimate), residual_(residual), iterations_(iterations) {}
  double estimate() const { return estimate_; }
  double residual() const { return residual_; }
  long long iterations() const { return iterations_; }

 private:
  double estimate_;
  double residual_;
  long long iterations_;
};

}  // namespace dsrx
