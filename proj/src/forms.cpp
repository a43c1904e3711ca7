#include "dirac/forms.hpp"

namespace dirac {

SymBilinearForm::SymBilinearForm(Mat gram) : gram_(std::move(gram)) {
  if (!gram_.is_symmetric()) throw Error("bilinear form gram must be symmetric");
}

SymBivector::SymBivector(Mat gram) : gram_(std::move(gram)) {
  if (!gram_.is_symmetric()) throw Error("bivector gram must be symmetric");
}

SymBivector pushforward(const Mat& f, const SymBivector& beta) {
  if (f.cols() != beta.dim()) throw Error("pushforward: dimension mismatch");
  return SymBivector(f * beta.gram() * f.transpose());
}

bool is_coisotropic(const Subspace& u, const SymBivector& beta) {
  if (u.ambient_dim() != beta.dim()) throw Error("is_coisotropic: dimension mismatch");
  // route 1: beta dies in the quotient V/U
  QuotientSpace q = quotient(u.ambient_dim(), u);
  bool via_quotient = pushforward(q.projection, beta).gram().is_zero();
  // route 2: beta#(ann U) inside U
  Subspace ann = annihilator(u);
  bool via_sharp = true;
  for (std::size_t i = 0; i < ann.dim(); ++i)
    if (!u.contains(beta.sharp(ann.basis_vector(i)))) {
      via_sharp = false;
      break;
    }
  if (via_quotient != via_sharp)
    throw Error("is_coisotropic: definitions disagree (internal bug)");
  return via_quotient;
}

}  // namespace dirac
