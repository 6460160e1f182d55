#ifndef CAPFORGE_ERRORS_HPP
#define CAPFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace capforge {

/// Base class for all library errors.  The message always names the violated
/// hypothesis or the offending input so callers can surface it verbatim.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Multiplicative inverse (or negative power) of zero requested.
class division_by_zero : public error {
public:
    division_by_zero() : error("division by zero in finite field") {}
};

/// A projective point was given as the all-zero coordinate vector.
class zero_vector : public error {
public:
    zero_vector() : error("zero vector has no projective normalization") {}
};

/// An operation requiring distinct points received a repeated one.
class duplicate_point : public error {
public:
    explicit duplicate_point(const std::string& what) : error(what) {}
};

/// A projectivity expected to act integrally produced a non-normalized image.
class integrality_violated : public error {
public:
    explicit integrality_violated(const std::string& what) : error(what) {}
};

/// A point set violates the plane-arc conditions (duplicates or 3 collinear).
class not_an_arc : public error {
public:
    explicit not_an_arc(const std::string& what) : error(what) {}
};

/// A named hypothesis of a construction is not satisfied by the input.
class hypothesis_violated : public error {
public:
    explicit hypothesis_violated(const std::string& what) : error(what) {}
};

/// A bounded search ran out of candidates without reaching its target.
class search_exhausted : public error {
public:
    explicit search_exhausted(const std::string& what) : error(what) {}
};

/// An element guaranteed to exist under the preconditions was not found.
class not_found : public error {
public:
    explicit not_found(const std::string& what) : error(what) {}
};

/// No valid quadratic parameter exists for the requested quartic arc family.
class no_valid_w : public error {
public:
    explicit no_valid_w(const std::string& what) : error(what) {}
};

/// A construction-specific precondition on the field or size fails.
class precondition_violated : public error {
public:
    explicit precondition_violated(const std::string& what) : error(what) {}
};

/// Arguments are outside the documented domain of the operation.
class bad_parameters : public error {
public:
    explicit bad_parameters(const std::string& what) : error(what) {}
};

/// The object is too small for the requested derivation.
class too_small : public error {
public:
    explicit too_small(const std::string& what) : error(what) {}
};

/// The instance exceeds the documented feasibility limit of the operation.
class too_large : public error {
public:
    explicit too_large(const std::string& what) : error(what) {}
};

/// Parse failure in one of the text file formats.
class parse_error : public error {
public:
    explicit parse_error(const std::string& what) : error(what) {}
};

}  // namespace capforge

#endif  // CAPFORGE_ERRORS_HPP
