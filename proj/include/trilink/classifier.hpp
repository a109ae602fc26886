#pragma once

// Class labels for linkings of two and three triangles.
//
// A 3-linking with all parities zero that is not Borromean is reported as
// ZeroProfileNonBorromean: it would be the unlink only if the five-class
// classification of triangle triples is complete, which is open.

#include "trilink/invariants.hpp"
#include "trilink/linking.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace trilink {

enum class ClassLabel2 { Split, Hopf, NonGeneric };

enum class ClassLabel3 { Borromean, HopfSplit, Chain3, Necklace, ZeroProfileNonBorromean, NonGeneric };

inline std::string_view to_string(ClassLabel2 label) {
  switch (label) {
    case ClassLabel2::Split: return "Split";
    case ClassLabel2::Hopf: return "Hopf";
    case ClassLabel2::NonGeneric: return "NonGeneric";
  }
  return "";
}

inline std::string_view to_string(ClassLabel3 label) {
  switch (label) {
    case ClassLabel3::Borromean: return "Borromean";
    case ClassLabel3::HopfSplit: return "HopfSplit";
    case ClassLabel3::Chain3: return "Chain3";
    case ClassLabel3::Necklace: return "Necklace";
    case ClassLabel3::ZeroProfileNonBorromean: return "ZeroProfileNonBorromean";
    case ClassLabel3::NonGeneric: return "NonGeneric";
  }
  return "";
}

/// Two-triangle classes are decided by parity alone.
inline ClassLabel2 classify2(const Triangle& a, const Triangle& b) {
  try {
    return linking_parity(a, b) == 1 ? ClassLabel2::Hopf : ClassLabel2::Split;
  } catch (const NonGenericError&) {
    return ClassLabel2::NonGeneric;
  }
}

/// The invariant pair used for separation: parity multiset and Borromean
/// flag. Absent parity means some pair is non-generic.
struct Signature {
  std::optional<ParityProfile> parity;
  bool borromean = false;

  std::string str() const {
    return "parity=" + (parity ? parity->str() : std::string("undefined")) +
           " borromean=" + (borromean ? "true" : "false");
  }
  friend bool operator==(const Signature&, const Signature&) = default;
};

inline Signature signature(const Linking& link) {
  Signature s;
  try {
    s.parity = pairwise_parity_profile(link);
  } catch (const NonGenericError&) {
  }
  s.borromean = is_borromean(link);
  return s;
}

inline ClassLabel3 classify3(const Signature& s) {
  if (!s.parity) return ClassLabel3::NonGeneric;
  switch (s.parity->linked_pairs()) {
    case 1: return ClassLabel3::HopfSplit;
    case 2: return ClassLabel3::Chain3;
    case 3: return ClassLabel3::Necklace;
    default: return s.borromean ? ClassLabel3::Borromean : ClassLabel3::ZeroProfileNonBorromean;
  }
}

inline ClassLabel3 classify3(const Linking& link) { return classify3(signature(link)); }

}  // namespace trilink
