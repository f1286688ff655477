#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thom {

// Every failure mode carries the name of the violated invariant so front
// ends can report it verbatim.
enum class errc {
    duplicate_generator,
    self_pair,
    unknown_generator,
    unknown_element,
    unknown_vertex,
    duplicate_vertex,
    unknown_name,
    base_moved,
    commutation_violation,
    missing_entry,
    duplicate_entry,
    duplicate_element,
    not_a_subalphabet,
    not_flag,
    not_prime,
    degree_out_of_range,
    name_clash,
    non_canonical_group,
    empty_complex,
    syntax_error,
};

constexpr std::string_view errc_name(errc e) {
    switch (e) {
        case errc::duplicate_generator: return "DuplicateGenerator";
        case errc::self_pair: return "SelfPair";
        case errc::unknown_generator: return "UnknownGenerator";
        case errc::unknown_element: return "UnknownElement";
        case errc::unknown_vertex: return "UnknownVertex";
        case errc::duplicate_vertex: return "DuplicateVertex";
        case errc::unknown_name: return "UnknownName";
        case errc::base_moved: return "BaseMoved";
        case errc::commutation_violation: return "CommutationViolation";
        case errc::missing_entry: return "MissingEntry";
        case errc::duplicate_entry: return "DuplicateEntry";
        case errc::duplicate_element: return "DuplicateElement";
        case errc::not_a_subalphabet: return "NotASubAlphabet";
        case errc::not_flag: return "NotFlag";
        case errc::not_prime: return "NotPrime";
        case errc::degree_out_of_range: return "DegreeOutOfRange";
        case errc::name_clash: return "NameClash";
        case errc::non_canonical_group: return "NonCanonicalGroup";
        case errc::empty_complex: return "EmptyComplex";
        case errc::syntax_error: return "SyntaxError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
  public:
    Error(errc kind, const std::string& detail)
        : std::runtime_error(std::string(errc_name(kind)) + ": " + detail),
          kind_(kind) {}

    errc kind() const { return kind_; }

  private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& detail) {
    throw Error(kind, detail);
}

}  // namespace thom
