#include "rfrp/grp/abelian_hom.hpp"

#include <cstdlib>
#include <limits>

#include "rfrp/errors.hpp"

namespace rfrp::grp {

AbelianHom::AbelianHom(const Presentation& source, std::vector<BigInt> moduli,
                       std::vector<std::vector<BigInt>> images)
    : n_(source.n_generators()), moduli_(std::move(moduli)), images_(std::move(images)) {
  for (const auto& m : moduli_)
    if (m < 0 || m == 1) throw InputError("abelian hom: moduli must be 0 or at least 2");
  if (static_cast<int>(images_.size()) != n_) throw InputError("abelian hom: one image per generator required");
  for (auto& im : images_) {
    if (im.size() != moduli_.size()) throw InputError("abelian hom: image length differs from target size");
    im = reduce(std::move(im));
  }
  for (const auto& r : source.relators()) {
    auto v = substitute_hom(r, *this);
    for (const auto& x : v)
      if (x != 0) throw InputError("abelian hom: relator " + source.format(r) + " does not map to zero");
  }
}

std::size_t AbelianHom::target_rank() const {
  std::size_t r = 0;
  for (const auto& m : moduli_)
    if (m == 0) ++r;
  return r;
}

std::vector<BigInt> AbelianHom::target_divisors() const {
  std::vector<BigInt> out;
  for (const auto& m : moduli_)
    if (m != 0) out.push_back(m);
  return out;
}

BigInt AbelianHom::target_order() const {
  if (!finite_target()) throw InputError("abelian hom: target is infinite");
  BigInt o = 1;
  for (const auto& m : moduli_) o *= m;
  return o;
}

std::vector<BigInt> AbelianHom::reduce(std::vector<BigInt> v) const {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (moduli_[k] != 0) mpz_mod(v[k].get_mpz_t(), v[k].get_mpz_t(), moduli_[k].get_mpz_t());
  return v;
}

std::vector<BigInt> substitute_hom(const Word& w, const AbelianHom& h) {
  std::vector<BigInt> acc(h.moduli().size());
  for (Letter l : w.letters()) {
    std::size_t g = static_cast<std::size_t>(std::abs(l) - 1);
    if (static_cast<int>(g) >= h.source_generators()) throw InputError("substitute_hom: letter out of range");
    const auto& im = h.images()[g];
    for (std::size_t k = 0; k < acc.size(); ++k) {
      if (l > 0)
        acc[k] += im[k];
      else
        acc[k] -= im[k];
    }
  }
  return h.reduce(std::move(acc));
}

SmallHom SmallHom::from(const AbelianHom& h) {
  SmallHom s;
  for (const auto& m : h.moduli()) {
    if (m == 0 || !m.fits_sint_p() || m > std::numeric_limits<std::int32_t>::max())
      throw ResourceLimit("finite hom with modulus too large for fast evaluation");
    s.moduli.push_back(m.get_si());
  }
  for (const auto& im : h.images()) {
    std::vector<std::int64_t> v;
    for (const auto& x : im) v.push_back(x.get_si());
    s.images.push_back(std::move(v));
  }
  return s;
}

void SmallHom::accumulate(std::vector<std::int64_t>& acc, Letter l) const {
  const auto& im = images[static_cast<std::size_t>(std::abs(l) - 1)];
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (im[k] == 0) continue;
    std::int64_t v = l > 0 ? acc[k] + im[k] : acc[k] - im[k];
    v %= moduli[k];
    if (v < 0) v += moduli[k];
    acc[k] = v;
  }
}

std::vector<std::int64_t> SmallHom::apply(const Word& w) const {
  std::vector<std::int64_t> acc(moduli.size(), 0);
  for (Letter l : w.letters()) accumulate(acc, l);
  return acc;
}

}  // namespace rfrp::grp
