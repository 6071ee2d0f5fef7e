#pragma once

#include "hermlie/hermitian.hpp"
#include "hermlie/salamon.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hermlie {

struct NamedFamily {
  std::string name;                     // ASCII display name, e.g. "g_{5,17}^{alpha,beta,gamma}"
  std::vector<std::string> aliases;     // accepted after normalization
  std::size_t dim;
  std::string differentials;            // parameterised differential string
  std::vector<std::string> parameters;  // ASCII parameter names
  std::string constraint;               // human-readable constraint, empty if none
};

/// The named families with their parameter constraints.
const std::vector<NamedFamily>& named_families();

/// Builds a named family member.  Names accept Greek or ASCII parameter
/// letters with or without braces.  Throws UnknownName,
/// ConstraintViolated (naming the inequality) or UnboundParameter.
LieAlgebra named_algebra(const std::string& name, const Bindings& params);

struct Witness {
  std::string label;
  Metric metric;
  Verdicts expected;
};

struct CatalogEntry {
  std::string name;
  std::string salamon;
  LieAlgebra algebra;
  std::optional<ComplexStructure> j;
  std::vector<Witness> witnesses;
  std::string citation;  // which classification statement the entry illustrates
  std::string notes;
};

/// Six-dimensional Kaehler families at sample parameters, the codimension-two
/// SKT families of pure type II, and the two SKT-and-balanced but non-Kaehler
/// examples, each with explicit metrics and expected verdicts.
const std::vector<CatalogEntry>& witness_lists();

/// Entry by exact name; throws UnknownName.
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace hermlie
