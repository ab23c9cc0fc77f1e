#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "irrstrength/error.hpp"
#include "irrstrength/graph.hpp"
#include "irrstrength/labeling.hpp"
#include "irrstrength/strength.hpp"

// Closed-form labelings of the triangular book B_n.
//
// Labels are laid out in the canonical edge order of make_triangular_book:
// index 0 is ab, index i is ac_i and index n+i is bc_i (1 <= i <= n).
namespace irrstrength::book {

enum class Theorem { irregular = 1, modular = 2 };

enum class CaseTag {
  n1,
  n2,
  n5,
  mod8r1,
  mod8r5,
  mod4r2,
  mod4r3,
  infinite,
  generic_odd,
  generic_even,
};

struct BookCase {
  Theorem theorem;
  CaseTag tag;

  friend bool operator==(const BookCase&, const BookCase&) = default;
};

inline std::string_view to_string(CaseTag t) {
  switch (t) {
    case CaseTag::n1: return "n1";
    case CaseTag::n2: return "n2";
    case CaseTag::n5: return "n5";
    case CaseTag::mod8r1: return "mod8r1";
    case CaseTag::mod8r5: return "mod8r5";
    case CaseTag::mod4r2: return "mod4r2";
    case CaseTag::mod4r3: return "mod4r3";
    case CaseTag::infinite: return "infinite";
    case CaseTag::generic_odd: return "generic-odd";
    case CaseTag::generic_even: return "generic-even";
  }
  return "?";
}

inline void require_pages(std::size_t n) {
  if (n == 0) throw domain_error("triangular book needs n >= 1");
  if (n + 2 > kMaxOrder) throw domain_error("triangular book too large");
}

inline BookCase classify(Theorem theorem, std::size_t n) {
  require_pages(n);
  if (n == 1) return {theorem, CaseTag::n1};
  if (theorem == Theorem::irregular) {
    if (n == 2) return {theorem, CaseTag::n2};
    return {theorem, n % 2 == 1 ? CaseTag::generic_odd : CaseTag::generic_even};
  }
  if (n == 5) return {theorem, CaseTag::n5};
  switch (n % 8) {
    case 0:
    case 4: return {theorem, CaseTag::infinite};
    case 1: return {theorem, CaseTag::mod8r1};
    case 5: return {theorem, CaseTag::mod8r5};
    case 2:
    case 6: return {theorem, CaseTag::mod4r2};
    default: return {theorem, CaseTag::mod4r3};
  }
}

inline Label theorem1_strength(std::size_t n) {
  require_pages(n);
  if (n == 1) return 3;
  return irrstrength::detail::ceil_div(static_cast<Label>(n) + 1, Label{2});
}

inline Strength theorem2_strength(std::size_t n) {
  require_pages(n);
  if (n == 1) return Strength::finite(3);
  if (n == 5) return Strength::finite(4);
  if (n % 4 == 0) return Strength::infinite();
  return Strength::finite(irrstrength::detail::ceil_div(static_cast<Label>(n) + 1, Label{2}));
}

namespace detail {

using irrstrength::detail::exact_div;

// Label vector for B_n, addressed by role.
class BookLabels {
 public:
  explicit BookLabels(std::size_t n) : n_(n), labels_(2 * n + 1, 0) {}
  Label& ab() { return labels_[0]; }
  Label& ac(std::size_t i) { return labels_[i]; }
  Label& bc(std::size_t i) { return labels_[n_ + i]; }
  EdgeLabeling finish() && { return EdgeLabeling(std::move(labels_)); }

 private:
  std::size_t n_;
  std::vector<Label> labels_;
};

// B_1 is a triangle; labels 1, 2, 3 on ab, ac_1, bc_1 give weights
// a = 3, b = 4, c_1 = 5, residues 0, 1, 2 mod 3.
inline EdgeLabeling triangle_labeling() { return EdgeLabeling({1, 2, 3}); }

}  // namespace detail

// Irregular assignment with max label theorem1_strength(n).
inline EdgeLabeling theorem1_labeling(std::size_t n) {
  using detail::exact_div;
  require_pages(n);
  if (n == 1) return detail::triangle_labeling();
  detail::BookLabels f(n);
  f.ab() = n == 2 ? 2 : 1;
  for (std::size_t idx = 1; idx <= n; ++idx) {
    const auto i = static_cast<Label>(idx);
    if (i % 2 == 1) {
      f.ac(idx) = exact_div(i + 1, Label{2});
      f.bc(idx) = exact_div(i + 1, Label{2});
    } else {
      f.ac(idx) = exact_div(i, Label{2});
      f.bc(idx) = exact_div(i, Label{2}) + 1;
    }
  }
  return std::move(f).finish();
}

// Modular irregular labeling with max label theorem2_strength(n), or
// nullopt when n = 0 (mod 4) and none exists.
inline std::optional<EdgeLabeling> theorem2_labeling(std::size_t n) {
  using detail::exact_div;
  const auto c = classify(Theorem::modular, n);
  const auto nn = static_cast<Label>(n);
  detail::BookLabels f(n);
  switch (c.tag) {
    case CaseTag::n1:
      return detail::triangle_labeling();
    case CaseTag::infinite:
      return std::nullopt;
    case CaseTag::n5:
      return EdgeLabeling({1, 1, 1, 1, 2, 2, 1, 2, 3, 3, 4});
    case CaseTag::mod8r1: {
      const auto mid = static_cast<std::size_t>(exact_div(nn + 1, Label{2}));
      f.ab() = 1;
      for (std::size_t idx = 1; idx <= n; ++idx) {
        const auto i = static_cast<Label>(idx);
        if (idx < mid) {
          f.ac(idx) = 1;
          f.bc(idx) = i;
        } else if (idx == mid) {
          f.ac(idx) = exact_div(nn - 1, Label{8}) + 2;
          f.bc(idx) = exact_div(3 * nn - 3, Label{8});
        } else {
          f.ac(idx) = exact_div(2 * i - nn + 1, Label{2});
          f.bc(idx) = exact_div(nn + 1, Label{2});
        }
      }
      break;
    }
    case CaseTag::mod8r5: {
      // n >= 13 here; n = 5 is handled separately above.
      const auto mid = static_cast<std::size_t>(exact_div(nn + 1, Label{2}));
      f.ab() = 1;
      for (std::size_t idx = 1; idx <= n; ++idx) {
        const auto i = static_cast<Label>(idx);
        if (idx < mid) {
          f.ac(idx) = 1;
          f.bc(idx) = i;
        } else if (idx == mid) {
          f.ac(idx) = exact_div(nn + 1, Label{2});
          f.bc(idx) = 1;
        } else if (idx == mid + 1) {
          f.ac(idx) = exact_div(nn + 35, Label{8});
          f.bc(idx) = exact_div(3 * nn - 15, Label{8});
        } else {
          f.ac(idx) = exact_div(2 * i - nn + 1, Label{2});
          // Constant tail keeps w(c_i) = i + 1 on this range.
          f.bc(idx) = exact_div(nn + 1, Label{2});
        }
      }
      break;
    }
    case CaseTag::mod4r2:
    case CaseTag::mod4r3: {
      f.ab() = c.tag == CaseTag::mod4r2 ? exact_div(nn + 6, Label{4}) : 1;
      for (std::size_t idx = 1; idx <= n; ++idx) {
        const auto i = static_cast<Label>(idx);
        if (i % 2 == 1) {
          f.ac(idx) = exact_div(i + 1, Label{2});
          f.bc(idx) = exact_div(i + 1, Label{2});
        } else if (i % 4 == 0) {
          f.ac(idx) = exact_div(i, Label{2}) + 1;
          f.bc(idx) = exact_div(i, Label{2});
        } else {
          f.ac(idx) = exact_div(i, Label{2});
          f.bc(idx) = exact_div(i, Label{2}) + 1;
        }
      }
      break;
    }
    default:
      throw std::logic_error("unexpected case for the modular construction");
  }
  return std::move(f).finish();
}

// Weights the constructions above are expected to induce, from the closed
// forms alone: c_i gets i + 1 and the centres get the quadratic forms of
// their residue class.
inline WeightProfile predicted_weights(std::size_t n, Theorem theorem) {
  using detail::exact_div;
  const auto c = classify(theorem, n);
  const auto nn = static_cast<Label>(n);
  Weight wa = 0;
  Weight wb = 0;
  switch (c.tag) {
    case CaseTag::n1: wa = 3; wb = 4; break;
    case CaseTag::n2: wa = 4; wb = 5; break;
    case CaseTag::generic_odd:
      wa = exact_div(nn * nn + 2 * nn + 5, Label{4});
      wb = exact_div(nn * nn + 4 * nn + 3, Label{4});
      break;
    case CaseTag::generic_even:
      wa = exact_div(nn * nn + 2 * nn + 4, Label{4});
      wb = exact_div(nn * nn + 4 * nn + 4, Label{4});
      break;
    case CaseTag::n5: wa = 8; wb = 14; break;
    case CaseTag::mod8r1:
      wa = exact_div((nn + 7) * (nn + 2), Label{8});
      wb = exact_div(3 * (nn - 1) * (nn + 2), Label{8}) + 1;
      break;
    case CaseTag::mod8r5:
      wa = exact_div((nn + 11) * (nn + 2), Label{8});
      wb = exact_div((3 * nn - 7) * (nn + 2), Label{8}) + 1;
      break;
    case CaseTag::mod4r2:
      wa = exact_div((nn + 2) * (nn + 2), Label{4});
      wb = wa + 1;
      break;
    case CaseTag::mod4r3:
      wa = exact_div((nn + 1) * (nn + 2), Label{4});
      wb = wa + 1;
      break;
    case CaseTag::infinite:
      throw domain_error("no modular irregular labeling exists for n = 0 (mod 4)");
  }
  WeightProfile p;
  p.weights.reserve(n + 2);
  p.weights.push_back(wa);
  p.weights.push_back(wb);
  if (n == 1) {
    p.weights.push_back(5);
  } else {
    for (Label i = 1; i <= nn; ++i) p.weights.push_back(i + 1);
  }
  for (auto w : p.weights) p.residues.push_back(w % (nn + 2));
  return p;
}

}  // namespace irrstrength::book
