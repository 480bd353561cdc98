#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace klc {

enum class Letter : std::uint8_t { S, T };

inline Letter other(Letter g) { return g == Letter::S ? Letter::T : Letter::S; }
char to_char(Letter g);

/// Coxeter exponent of D_{2n}; the group has order 2n.
class GroupParams {
 public:
  explicit GroupParams(int n);
  int n() const { return n_; }
  int order() const { return 2 * n_; }
  friend bool operator==(const GroupParams&, const GroupParams&) = default;

 private:
  int n_;
};

/// Canonical form of an element of D_{2n}: the identity, an alternating word
/// of length 1..n-1 with a given first letter, or the longest element w0.
class DihedralElement {
 public:
  enum class Kind : std::uint8_t { Identity, Word, Longest };

  static DihedralElement identity() { return DihedralElement(Kind::Identity, Letter::S, 0); }
  static DihedralElement word(Letter start, int length);
  static DihedralElement longest(int n) { return DihedralElement(Kind::Longest, Letter::S, n); }

  Kind kind() const { return kind_; }
  /// First letter of the word; meaningless for Identity and Longest.
  Letter start() const { return start_; }
  int length() const { return length_; }

  /// Alternating reduced expression; w0 is written starting with s.
  std::string reduced_word() const;
  /// "e", "w0" or the reduced word.
  std::string label() const;

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;

  /// Enumeration order: by length, then s-words before t-words.
  friend std::strong_ordering operator<=>(const DihedralElement& x, const DihedralElement& y);

 private:
  DihedralElement(Kind kind, Letter start, int length)
      : kind_(kind), start_(start), length_(length) {}

  Kind kind_;
  Letter start_;
  int length_;
};

/// Bitmask subset of {s, t}.
struct DescentSet {
  bool s = false;
  bool t = false;
  bool contains(Letter g) const { return g == Letter::S ? s : t; }
  friend bool operator==(const DescentSet&, const DescentSet&) = default;
};

/// Rotation/reflection model: element sigma^reflection * rho^rotation with
/// s = sigma and t = sigma * rho.
struct RotationReflection {
  int rotation = 0;
  bool reflection = false;
  friend bool operator==(const RotationReflection&, const RotationReflection&) = default;
};

RotationReflection to_rotation_reflection(const GroupParams& params, const DihedralElement& el);
DihedralElement from_rotation_reflection(const GroupParams& params, RotationReflection rr);

/// Product of the letters of `word` (characters 's' and 't') in canonical
/// form. Throws std::invalid_argument on any other character.
DihedralElement make_element(const GroupParams& params, std::string_view word);

/// Parses a label as produced by `DihedralElement::label()`.
DihedralElement parse_element(const GroupParams& params, std::string_view label);

DihedralElement multiply(const GroupParams& params, const DihedralElement& u,
                         const DihedralElement& v);
DihedralElement multiply(const GroupParams& params, const DihedralElement& u, Letter g);
DihedralElement multiply(const GroupParams& params, Letter g, const DihedralElement& u);
DihedralElement inverse(const GroupParams& params, const DihedralElement& el);

inline int length(const DihedralElement& el) { return el.length(); }

DescentSet right_descents(const GroupParams& params, const DihedralElement& el);
DescentSet left_descents(const GroupParams& params, const DihedralElement& el);

/// All 2n elements in enumeration order.
std::vector<DihedralElement> enumerate_elements(const GroupParams& params);

/// Position of `el` in `enumerate_elements(params)`.
int element_index(const GroupParams& params, const DihedralElement& el);

/// Set of products of all subwords of `word`, as a membership mask over
/// element indices. For a reduced word of v this is the Bruhat interval [e, v].
std::vector<bool> subword_products(const GroupParams& params, std::string_view word);

/// Bruhat order. Uses the length criterion once it has been checked against
/// `subword_products` for this n, otherwise the subword test directly.
bool bruhat_leq(const GroupParams& params, const DihedralElement& u, const DihedralElement& v);

/// Whether the length criterion for Bruhat order holds for every pair at this
/// n, established by exhaustive comparison with the subword test. Cached.
bool bruhat_length_criterion_verified(const GroupParams& params);

}  // namespace klc
