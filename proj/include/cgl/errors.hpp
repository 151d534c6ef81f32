#pragma once

#include <stdexcept>
#include <string>

namespace cgl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyGeneratorSet : Error {
    EmptyGeneratorSet() : Error("empty generator set") {}
};

struct ClosureExceedsCap : Error {
    explicit ClosureExceedsCap(long cap)
        : Error("group closure exceeds cap of " + std::to_string(cap) + " elements") {}
};

struct SingularGenerator : Error {
    SingularGenerator() : Error("matrix generator has zero determinant mod p") {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error("index out of range: " + what) {}
};

struct AbelianGroup : Error {
    AbelianGroup() : Error("operation undefined for abelian groups (no non-central elements)") {}
};

struct UnknownGroupName : Error {
    explicit UnknownGroupName(const std::string& name) : Error("unknown group name: " + name) {}
};

struct MalformedExpression : Error {
    explicit MalformedExpression(const std::string& what) : Error("malformed shape expression: " + what) {}
};

struct UnsupportedComponent : Error {
    explicit UnsupportedComponent(const std::string& what) : Error("no closed-form spectrum: " + what) {}
};

struct InconsistentInputs : Error {
    explicit InconsistentInputs(const std::string& what) : Error("inconsistent inputs: " + what) {}
};

struct EmptyEdgeSet : Error {
    EmptyEdgeSet() : Error("graph has no edges; ratio undefined") {}
};

struct UncertifiedComparison : Error {
    explicit UncertifiedComparison(const std::string& what)
        : Error("cannot certify comparison: " + what) {}
};

}  // namespace cgl
