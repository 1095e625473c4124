#pragma once

#include <stdexcept>
#include <string>

namespace wr {

// Base for all domain errors. The CLI maps these to exit code 1,
// parse errors to exit code 2.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct incomparable_imaginary_parts : domain_error {
    incomparable_imaginary_parts()
        : domain_error("imaginary parts differ; real comparison undefined") {}
};

struct negative_multiplicity : domain_error {
    negative_multiplicity()
        : domain_error("virtual representation has a negative multiplicity") {}
};

struct wrong_dimension : domain_error {
    explicit wrong_dimension(const std::string& what) : domain_error(what) {}
};

struct zero_length : domain_error {
    zero_length() : domain_error("zero-length segment is a character, not a discrete series") {}
};

struct point_input : domain_error {
    point_input() : domain_error("segment pair classification requires length >= 1") {}
};

struct not_reducible : domain_error {
    not_reducible() : domain_error("principal series is irreducible; no decomposition") {}
};

struct configuration_not_covered : domain_error {
    explicit configuration_not_covered(const std::string& what) : domain_error(what) {}
};

struct not_reducible_configuration : domain_error {
    explicit not_reducible_configuration(const std::string& what) : domain_error(what) {}
};

struct mixed_imaginary_parts : domain_error {
    mixed_imaginary_parts()
        : domain_error("factor centers have incomparable imaginary parts") {}
};

struct dimension_mismatch : domain_error {
    explicit dimension_mismatch(const std::string& what) : domain_error(what) {}
};

struct unsupported_group : domain_error {
    explicit unsupported_group(const std::string& what) : domain_error(what) {}
};

// Parse failures carry the byte offset and what was expected there.
struct parse_error : std::runtime_error {
    std::size_t offset;
    std::string expected;

    parse_error(std::size_t off, std::string exp)
        : std::runtime_error("parse error at offset " + std::to_string(off) +
                             ": expected " + exp),
          offset(off), expected(std::move(exp)) {}
};

} // namespace wr
