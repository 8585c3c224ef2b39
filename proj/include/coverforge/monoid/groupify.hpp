#pragma once

// Groupification M^gp = Z^n / <u - v> of a presented monoid, read off the
// Smith normal form of the relation lattice.

#include <string>
#include <vector>

#include "coverforge/monoid/rewrite.hpp"
#include "coverforge/ring/snf.hpp"

namespace coverforge {

class Groupification {
 public:
  /// Image coordinates: free part first, then torsion residues.
  using Image = std::vector<Integer>;

  explicit Groupification(const MonoidPresentation& p) : rank_(p.rank()) {
    const auto& rel = p.relations();
    Matrix<Integer> m(rel.size(), rank_, Integer(0));
    for (std::size_t i = 0; i < rel.size(); ++i)
      for (std::size_t j = 0; j < rank_; ++j)
        m(i, j) = Integer(rel[i].lhs[j]) - Integer(rel[i].rhs[j]);
    SmithForm<Integer> s = smith_normal_form(m, false);
    v_ = s.v;
    std::vector<Integer> d = s.invariant_factors();
    const std::size_t r = d.size();
    for (std::size_t i = 0; i < r; ++i)
      if (d[i] != 1) {
        torsion_.push_back(d[i]);
        torsion_cols_.push_back(i);
      }
    for (std::size_t i = r; i < rank_; ++i) free_cols_.push_back(i);
    for (std::size_t g = 0; g < rank_; ++g)
      gen_images_.push_back(image(FreeElem::unit(rank_, g)));
  }

  std::size_t free_rank() const { return free_cols_.size(); }
  const std::vector<Integer>& torsion() const { return torsion_; }
  const std::vector<Image>& generator_images() const { return gen_images_; }

  /// Image of x in Z^free_rank + (+) Z/torsion_i.
  Image image(const FreeElem& x) const {
    if (x.rank() != rank_) throw InvalidInput("rank mismatch in groupification");
    auto coord = [&](std::size_t col) {
      Integer y = 0;
      for (std::size_t j = 0; j < rank_; ++j)
        if (x[j]) y += Integer(x[j]) * v_(j, col);
      return y;
    };
    Image out;
    for (std::size_t c : free_cols_) out.push_back(coord(c));
    for (std::size_t k = 0; k < torsion_cols_.size(); ++k) {
      Integer y = coord(torsion_cols_[k]);
      Integer r = y % torsion_[k];
      if (r < 0) r += torsion_[k];
      out.push_back(r);
    }
    return out;
  }

  static std::string key(const Image& img) {
    std::string s;
    for (const auto& c : img) s += c.get_str() + ",";
    return s;
  }

 private:
  std::size_t rank_;
  Matrix<Integer> v_;
  std::vector<Integer> torsion_;
  std::vector<std::size_t> torsion_cols_, free_cols_;
  std::vector<Image> gen_images_;
};

}  // namespace coverforge
