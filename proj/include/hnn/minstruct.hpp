#pragma once

// Exponent-2 group F spanned by e_i over an ordered index set, ordered by
// the top of the support: a < b iff max supp a < max supp b, and 0 < b iff
// b != 0. Index sets are omega, or I where each infinite ordinal is replaced
// by a copy of Z. Points of I are (ordinal, offset); ordinal 0 is the
// finite part and carries offsets 0, 1, 2, ...; omega uses (0, i) too, so
// the inclusion omega -> I is the identity on points.

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hnn::order {

enum class Mode { Omega, I };

struct ModeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IndexPoint {
  long ordinal = 0;
  long offset = 0;

  friend auto operator<=>(const IndexPoint&, const IndexPoint&) = default;
};

bool valid_point(Mode mode, const IndexPoint& p);

/// Class of an element under ~; nullopt is the class of 0 and the minimum.
struct DegreeClass {
  std::optional<IndexPoint> top;

  friend auto operator<=>(const DegreeClass&, const DegreeClass&) = default;
};

class F2Element {
 public:
  using Support = boost::container::small_vector<IndexPoint, 8>;

  explicit F2Element(Mode mode = Mode::Omega) : mode_(mode) {}
  /// Throws std::invalid_argument on repeated or invalid points.
  F2Element(Mode mode, std::initializer_list<IndexPoint> points);
  F2Element(Mode mode, std::vector<IndexPoint> points);
  static F2Element omega(std::initializer_list<long> indices);
  /// e_p
  static F2Element unit(Mode mode, IndexPoint p) { return F2Element(mode, {p}); }

  Mode mode() const { return mode_; }
  /// Ascending.
  const Support& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }

  friend bool operator==(const F2Element&, const F2Element&) = default;

 private:
  friend F2Element add(const F2Element&, const F2Element&);
  Mode mode_;
  Support support_;
};

F2Element add(const F2Element& a, const F2Element& b);
DegreeClass degree(const F2Element& a);
bool less(const F2Element& a, const F2Element& b);
/// Neither a < b nor b < a.
bool equivalent(const F2Element& a, const F2Element& b);

/// Number of index points strictly between the degrees of a and b, or
/// nullopt when infinitely many. Requires a < b.
std::optional<long> points_between(const F2Element& a, const F2Element& b);

/// a < b and the longest chain a < x_1 < ... < x_k < b has k = n.
bool p_n(long n, const F2Element& a, const F2Element& b);

/// Immediate neighbours of a degree class in the full index set.
DegreeClass successor(Mode mode, const DegreeClass& c);
/// nullopt for the class of 0.
std::optional<DegreeClass> predecessor(Mode mode, const DegreeClass& c);

/// "{0,3,5}" in mode omega, "{(0,2),(3,-1)}" in mode I.
F2Element parse_element(Mode mode, std::string_view text);
std::string to_string(const F2Element& a);

/// Finite window of index points over which the axioms are checked.
struct Domain {
  Mode mode = Mode::Omega;
  std::vector<IndexPoint> points;  // ascending
  std::size_t support_cap = 0;     // largest support size enumerated
};

/// Points 0 .. bound-1, every subset.
Domain omega_domain(int bound);
/// Points (0, 0 .. finite-1) and (c, -offset .. offset) for c = 1 .. copies,
/// subsets of size <= support_cap.
Domain i_domain(int copies, int offset, int finite, std::size_t support_cap);

std::vector<F2Element> elements(const Domain& d);

/// Longest chain a < x_1 < ... < x_k < b with every x_i in `elems`, for all
/// b in `elems` at once (index-aligned); 0 when there is none or b <= a.
std::vector<long> longest_chains_from(const F2Element& a, const std::vector<F2Element>& elems);

struct AxiomResult {
  int axiom = 0;
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;
  std::string note;

  bool pass() const { return failures == 0 && checked > 0; }
};

struct AxiomReport {
  Mode mode = Mode::Omega;
  std::size_t domain_size = 0;
  std::vector<AxiomResult> axioms;  // 1 .. 7
  /// Literal second clause of axiom 7 including x = y = 0.
  AxiomResult literal_axiom7;

  bool pass() const;
};

AxiomReport axiom_suite(const Domain& domain, long p_bound = 8);

struct EmbeddingReport {
  std::size_t pairs = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool pass() const { return failures == 0 && pairs > 0; }
};

/// i -> (0, i) preserves +, <, and P_n for n <= bound on supports inside
/// 0 .. bound-1.
EmbeddingReport embedding_check(int bound);

}  // namespace hnn::order
