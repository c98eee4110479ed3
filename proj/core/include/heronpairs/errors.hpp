#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace heronpairs {

// Base class for mathematically degenerate situations: a parameter on an
// excluded locus, a vanishing factor, a descent that cannot continue.
// The CLI maps anything derived from Degenerate to exit code 1, as opposed
// to operator errors (exit 2). The message names the vanishing factor or
// the failed construction.
class Degenerate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Side triple does not define a triangle (a side <= 0 or the Heron product
// is not strictly positive).
class InvalidSides : public Degenerate {
 public:
  using Degenerate::Degenerate;
};

// (x, y, t) parameters outside the domain of the parametrization.
class DegenerateParam : public Degenerate {
 public:
  using Degenerate::Degenerate;
};

// A closed-form family evaluated where a factor vanishes, a side degenerates
// or the two triangles coincide.
class DegenerateFamily : public Degenerate {
 public:
  using Degenerate::Degenerate;
};

// Gradient of the cubic vanishes at the point; no tangent line.
class SingularPoint : public Degenerate {
 public:
  using Degenerate::Degenerate;
};

// Tangent construction failed: third intersection at infinity, or the point
// is a flex (the tangent meets the curve only there).
class InflectionOrDegenerate : public Degenerate {
 public:
  using Degenerate::Degenerate;
};

// Chord construction failed: coincident points, third intersection at
// infinity, or the line is a component of the curve.
class DegenerateChord : public Degenerate {
 public:
  using Degenerate::Degenerate;
};

// The quartic is not a nonzero square at the descent base point.
class NotASquareAtBase : public Degenerate {
 public:
  using Degenerate::Degenerate;
};

// Fermat descent produced no new value for either sign choice.
class DescentStuck : public Degenerate {
 public:
  using Degenerate::Degenerate;
};

// Point descent could not produce any new point.
class Exhausted : public Degenerate {
 public:
  using Degenerate::Degenerate;
};

// A cross-check was asked about sides beyond the search bound; not a
// mathematical failure.
class OutOfBounds : public Degenerate {
 public:
  using Degenerate::Degenerate;
};

// Negative argument where a nonnegative one is required.
class NegativeInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed text input; `position` is the offset of the offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace heronpairs
