#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "curvedetect/word.hpp"

namespace cdt {

/// Default hard cap on the length of any generator image produced by composition.
inline constexpr std::size_t kDefaultImageCap = 1'000'000;

/// An automorphism of the free group, stored as the images of x1..x{2g} together
/// with the images under its inverse.
///
/// There is no general inversion algorithm here: inverses are carried along from
/// construction, which is enough because every mapping class arrives as a word
/// in twists with known inverses.
class FreeAutomorphism {
 public:
  /// Checks inverse(image(x_i)) == x_i for every generator and throws
  /// InvalidArgument otherwise.
  FreeAutomorphism(std::vector<Word> images, std::vector<Word> inverse_images);

  static FreeAutomorphism identity(Genus genus);

  Genus genus() const noexcept { return data_->genus; }
  const std::vector<Word>& images() const noexcept { return data_->images; }
  const std::vector<Word>& inverse_images() const noexcept { return data_->inverse_images; }
  /// Image of x_index, 1-based.
  const Word& image(int index) const { return data_->images.at(static_cast<std::size_t>(index - 1)); }

  FreeAutomorphism inverse() const;
  std::size_t max_image_length() const noexcept;

 private:
  struct Data {
    Genus genus;
    std::vector<Word> images;
    std::vector<Word> inverse_images;
  };
  explicit FreeAutomorphism(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  friend FreeAutomorphism compose(const FreeAutomorphism&, const FreeAutomorphism&, std::size_t);

  std::shared_ptr<const Data> data_;
};

/// Image of w under f. Throws ImageTooLong if the result exceeds `cap` letters.
Word apply(const FreeAutomorphism& f, const Word& w, std::size_t cap = kDefaultImageCap);

/// f after g, i.e. x -> f(g(x)).
FreeAutomorphism compose(const FreeAutomorphism& f, const FreeAutomorphism& g,
                         std::size_t cap = kDefaultImageCap);

/// f g f^-1 g^-1
FreeAutomorphism commutator(const FreeAutomorphism& f, const FreeAutomorphism& g,
                            std::size_t cap = kDefaultImageCap);
/// g f g^-1
FreeAutomorphism conjugate(const FreeAutomorphism& f, const FreeAutomorphism& g,
                           std::size_t cap = kDefaultImageCap);
FreeAutomorphism power(const FreeAutomorphism& f, int exponent, std::size_t cap = kDefaultImageCap);

/// Exact: all 2g images agree as reduced words.
bool auto_equal(const FreeAutomorphism& f, const FreeAutomorphism& g);
bool is_identity(const FreeAutomorphism& f);
bool commutes(const FreeAutomorphism& f, const FreeAutomorphism& g);

/// x -> w x w^-1 on x_1..x_last, identity on the remaining generators.
FreeAutomorphism inner_on_prefix(const Word& w, int last);

}  // namespace cdt
