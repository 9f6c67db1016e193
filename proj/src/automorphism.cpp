#include "curvedetect/automorphism.hpp"

#include <cstdlib>

#include "curvedetect/error.hpp"

namespace cdt {

namespace {

void check_genus(Genus a, Genus b) {
  if (a != b) {
    throw GenusMismatch("automorphisms of genus " + std::to_string(a.value) + " and genus " +
                        std::to_string(b.value));
  }
}

void append_image(std::vector<Letter>& out, const std::vector<Word>& images, Letter x) {
  const auto& img = images[static_cast<std::size_t>(std::abs(x) - 1)].letters();
  if (x > 0) {
    for (Letter y : img) push_reduced(out, y);
  } else {
    for (auto it = img.rbegin(); it != img.rend(); ++it) push_reduced(out, -*it);
  }
}

Word apply_images(Genus genus, const std::vector<Word>& images, const Word& w, std::size_t cap) {
  std::vector<Letter> out;
  for (Letter x : w.letters()) {
    append_image(out, images, x);
    // Cancellation can shrink the buffer again, so only a persistent overshoot is an error.
    if (out.size() > 2 * cap) break;
  }
  if (out.size() > cap) {
    throw ImageTooLong("image of length " + std::to_string(out.size()) + " exceeds cap " +
                       std::to_string(cap));
  }
  return Word::from_reduced(genus, std::move(out));
}

}  // namespace

FreeAutomorphism::FreeAutomorphism(std::vector<Word> images, std::vector<Word> inverse_images) {
  if (images.empty() || images.size() != inverse_images.size()) {
    throw InvalidArgument("automorphism needs one image and one inverse image per generator");
  }
  const Genus genus = images.front().genus();
  if (static_cast<int>(images.size()) != genus.rank()) {
    throw InvalidArgument("expected " + std::to_string(genus.rank()) + " images");
  }
  for (const auto& w : images) check_genus(w.genus(), genus);
  for (const auto& w : inverse_images) check_genus(w.genus(), genus);
  for (int i = 1; i <= genus.rank(); ++i) {
    const Word round_trip =
        apply_images(genus, inverse_images, images[static_cast<std::size_t>(i - 1)], kDefaultImageCap);
    if (round_trip != Word::generator(genus, i)) {
      throw InvalidArgument("inverse images do not invert the images on x" + std::to_string(i));
    }
  }
  data_ = std::make_shared<const Data>(Data{genus, std::move(images), std::move(inverse_images)});
}

FreeAutomorphism FreeAutomorphism::identity(Genus genus) {
  std::vector<Word> gens;
  for (int i = 1; i <= genus.rank(); ++i) gens.push_back(Word::generator(genus, i));
  return FreeAutomorphism(std::make_shared<const Data>(Data{genus, gens, gens}));
}

FreeAutomorphism FreeAutomorphism::inverse() const {
  return FreeAutomorphism(std::make_shared<const Data>(Data{genus(), inverse_images(), images()}));
}

std::size_t FreeAutomorphism::max_image_length() const noexcept {
  std::size_t m = 0;
  for (const auto& w : images()) m = std::max(m, w.length());
  return m;
}

Word apply(const FreeAutomorphism& f, const Word& w, std::size_t cap) {
  check_genus(f.genus(), w.genus());
  return apply_images(f.genus(), f.images(), w, cap);
}

FreeAutomorphism compose(const FreeAutomorphism& f, const FreeAutomorphism& g, std::size_t cap) {
  check_genus(f.genus(), g.genus());
  const Genus genus = f.genus();
  std::vector<Word> images, inverse_images;
  images.reserve(g.images().size());
  inverse_images.reserve(g.images().size());
  for (const auto& w : g.images()) images.push_back(apply_images(genus, f.images(), w, cap));
  for (const auto& w : f.inverse_images()) {
    inverse_images.push_back(apply_images(genus, g.inverse_images(), w, cap));
  }
  return FreeAutomorphism(std::make_shared<const FreeAutomorphism::Data>(
      FreeAutomorphism::Data{genus, std::move(images), std::move(inverse_images)}));
}

FreeAutomorphism commutator(const FreeAutomorphism& f, const FreeAutomorphism& g, std::size_t cap) {
  return compose(compose(f, g, cap), compose(f.inverse(), g.inverse(), cap), cap);
}

FreeAutomorphism conjugate(const FreeAutomorphism& f, const FreeAutomorphism& g, std::size_t cap) {
  return compose(compose(g, f, cap), g.inverse(), cap);
}

FreeAutomorphism power(const FreeAutomorphism& f, int exponent, std::size_t cap) {
  const FreeAutomorphism base = exponent >= 0 ? f : f.inverse();
  FreeAutomorphism out = FreeAutomorphism::identity(f.genus());
  for (int k = 0; k < std::abs(exponent); ++k) out = compose(out, base, cap);
  return out;
}

bool auto_equal(const FreeAutomorphism& f, const FreeAutomorphism& g) {
  check_genus(f.genus(), g.genus());
  return f.images() == g.images();
}

bool is_identity(const FreeAutomorphism& f) {
  for (int i = 1; i <= f.genus().rank(); ++i) {
    const auto img = f.image(i).letters();
    if (img.size() != 1 || img[0] != i) return false;
  }
  return true;
}

bool commutes(const FreeAutomorphism& f, const FreeAutomorphism& g) {
  return auto_equal(compose(f, g), compose(g, f));
}

FreeAutomorphism inner_on_prefix(const Word& w, int last) {
  const Genus genus = w.genus();
  const Word winv = invert(w);
  std::vector<Word> images, inverse_images;
  for (int i = 1; i <= genus.rank(); ++i) {
    const Word x = Word::generator(genus, i);
    images.push_back(i <= last ? conjugate(x, w) : x);
    inverse_images.push_back(i <= last ? conjugate(x, winv) : x);
  }
  return FreeAutomorphism(std::move(images), std::move(inverse_images));
}

}  // namespace cdt
