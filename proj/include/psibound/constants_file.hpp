#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "psibound/polynomial.hpp"

namespace psibound {

struct ProofPolynomial {
  std::string name;
  std::string source;
  RationalPolynomial poly;
};

/// Named proof polynomials loaded from the plain-text constants file
/// (see data/proof_polynomials.txt for the record layout).
class ProofConstants {
 public:
  /// The copy compiled into the library from data/proof_polynomials.txt.
  static const ProofConstants& builtin();

  /// Throws DomainError on malformed input: unknown keyword, bad number,
  /// coefficient count not matching the declared degree, zero leading
  /// coefficient or a duplicate name.
  static ProofConstants parse(std::string_view text);
  static ProofConstants load(const std::filesystem::path& path);

  const ProofPolynomial& at(const std::string& name) const;
  const RationalPolynomial& poly(const std::string& name) const { return at(name).poly; }
  bool contains(const std::string& name) const { return entries_.count(name) != 0; }
  const std::map<std::string, ProofPolynomial>& entries() const { return entries_; }

 private:
  std::map<std::string, ProofPolynomial> entries_;
};

}  // namespace psibound
