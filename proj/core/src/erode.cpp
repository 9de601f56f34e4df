#include "pmod/erode.hpp"

#include <sstream>

#include "pmod/decomp.hpp"
#include "pmod/distances.hpp"

namespace pmod {

static std::string pstr(const Point& p) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << ")";
  return os.str();
}

Submodule img_eps(const Module& M, int eps) {
  if (eps < 0) throw std::invalid_argument("img_eps needs eps >= 0");
  Submodule s{std::make_shared<Module>(M), {}};
  s.basis.resize(M.npoints());
  for (long long i = 0; i < M.npoints(); ++i) {
    Point q = M.grid.point(i);
    s.basis[i] = colspan(path_map(M, shifted(q, -eps), q));
  }
  return s;
}

Submodule ker_eps(const Module& M, int eps) {
  if (eps < 0) throw std::invalid_argument("ker_eps needs eps >= 0");
  Submodule s{std::make_shared<Module>(M), {}};
  s.basis.resize(M.npoints());
  for (long long i = 0; i < M.npoints(); ++i) {
    Point q = M.grid.point(i);
    s.basis[i] = colspan(nullspace(diag_path(M, q, eps)));
  }
  return s;
}

Erosion erosion(const Module& M, int eps) {
  Submodule img = img_eps(M, eps);
  Submodule k = sub_intersect(ker_eps(M, eps), img);
  k.ambient = img.ambient;
  Subquotient pres = subquotient(img, k);
  return Erosion{pres.quotient, std::move(pres), eps};
}

std::vector<int> erosion_dims(const Module& M, int eps) {
  std::vector<int> out(M.npoints());
  for (long long i = 0; i < M.npoints(); ++i) {
    Point q = M.grid.point(i);
    out[i] = rank(path_map(M, shifted(q, -eps), shifted(q, eps)));
  }
  return out;
}

ENCheck check_en_witness(const ENWitness& w) {
  ENCheck out;
  const Module& M = *w.ambient;
  Submodule img = img_eps(M, w.eps);
  Submodule ker = ker_eps(M, w.eps);
  for (long long i = 0; i < M.npoints(); ++i) {
    if (!span_contains(w.M1.basis[i], img.basis[i])) {
      out.violation = "Img_eps not contained in M1 at " + pstr(M.grid.point(i));
      return out;
    }
    if (!span_contains(ker.basis[i], w.M2.basis[i])) {
      out.violation = "M2 not contained in Ker_eps at " + pstr(M.grid.point(i));
      return out;
    }
    if (!span_contains(w.M1.basis[i], w.M2.basis[i])) {
      out.violation = "M2 not contained in M1 at " + pstr(M.grid.point(i));
      return out;
    }
  }
  if (!sub_is_closed(w.M1)) {
    out.violation = "M1 is not a submodule";
    return out;
  }
  if (!sub_is_closed(w.M2)) {
    out.violation = "M2 is not a submodule";
    return out;
  }
  out.pres = subquotient(w.M1, w.M2);
  out.member = out.pres->quotient;
  out.ok = true;
  return out;
}

ENInterleaving en_interleaving(const ENWitness& w, const Subquotient& pres) {
  const Module& M = *w.ambient;
  const int eps = w.eps;
  ModPtr E = pres.quotient;
  ModPtr Eshift = shift_module(*E, eps);
  ModPtr Mshift = shift_module(M, eps);
  Morphism phi(w.ambient, Eshift);
  Morphism psi(E, Mshift);
  for (long long i = 0; i < M.npoints(); ++i) {
    Point q = M.grid.point(i);
    Point r = shifted(q, eps);
    if (M.grid.inside(r)) {
      long long j = M.grid.index(r);
      // phi_q: v -> class of M_{q->q+eps}(v); image lies in Img_eps ⊆ M1
      phi.comp[i] = pres.express(j, path_map(M, q, r));
    }
    // psi_q: class of v (rep in M1) -> M_{q->q+eps}(v); kills M2 ⊆ Ker_eps
    psi.comp[i] = path_map(M, q, r) * pres.reps[i];
  }
  return ENInterleaving{E, std::move(phi), std::move(psi)};
}

CommonEN common_en_from_interleaving(const Module& M, const Module& N, const Morphism& phi,
                                     const Morphism& psi, int eps, u64 seed) {
  if (!verify_interleaving(M, N, phi, psi, eps))
    throw NotAnInterleaving("common_en_from_interleaving: interleaving identities fail");
  ModPtr Mp = phi.src;
  ModPtr Np = psi.src;
  const Grid& g = M.grid;

  auto img_shifted_back = [&](const Morphism& f, ModPtr ambient) {
    // image of f(-eps) computed directly: basis at q is colspan(f_{q-eps}); the
    // points below the box contribute nothing because supports are bounded.
    Submodule s{ambient, {}};
    s.basis.resize(g.npoints());
    for (long long i = 0; i < g.npoints(); ++i) {
      Point q = g.point(i);
      Point r = shifted(q, -eps);
      if (g.inside(r))
        s.basis[i] = colspan(f.comp[g.index(r)]);
      else
        s.basis[i] = Matrix(ambient->dim[i], 0, ambient->p);
    }
    return s;
  };
  auto kernel_at = [&](const Morphism& f, ModPtr ambient) {
    Submodule s{ambient, {}};
    s.basis.resize(g.npoints());
    for (long long i = 0; i < g.npoints(); ++i) s.basis[i] = colspan(nullspace(f.comp[i]));
    return s;
  };

  CommonEN out;
  Submodule M1 = sub_sum(img_eps(M, eps), img_shifted_back(psi, Mp));
  Submodule M2 = sub_intersect(sub_intersect(ker_eps(M, eps), kernel_at(phi, Mp)), M1);
  M1.ambient = Mp;
  M2.ambient = Mp;
  out.on_M = ENWitness{Mp, M1, M2, eps};
  Subquotient presM = subquotient(M1, M2);
  out.member_M = presM.quotient;

  Submodule N1 = sub_sum(img_eps(N, eps), img_shifted_back(phi, Np));
  Submodule N2 = sub_intersect(sub_intersect(ker_eps(N, eps), kernel_at(psi, Np)), N1);
  N1.ambient = Np;
  N2.ambient = Np;
  out.on_N = ENWitness{Np, N1, N2, eps};
  Subquotient presN = subquotient(N1, N2);
  out.member_N = presN.quotient;

  out.members_isomorphic = are_isomorphic(*out.member_M, *out.member_N, seed).verdict;
  return out;
}

bool en_membership_bruteforce(const Module& N, const Module& M, int eps) {
  if (M.p != 2 || N.p != 2) throw CapExceeded("en_membership_bruteforce requires GF(2)");
  if (M.total_dim() > 8) throw CapExceeded("en_membership_bruteforce: total dim > 8");
  long long support = 0;
  for (int d_ : M.dim)
    if (d_ > 0) ++support;
  if (support > 16) throw CapExceeded("en_membership_bruteforce: > 16 support points");
  if (!(M.grid == N.grid)) return false;

  ModPtr Mp = std::make_shared<Module>(M);
  Submodule img = img_eps(M, eps);
  img.ambient = Mp;
  Submodule ker = ker_eps(M, eps);
  ker.ambient = Mp;
  Submodule full = full_submodule(Mp);
  Submodule zero = zero_submodule(Mp);

  bool found = false;
  foreach_submodule_gf2(M, img, full, [&](const Submodule& M1) {
    Submodule upper2 = sub_intersect(ker, M1);
    upper2.ambient = Mp;
    foreach_submodule_gf2(M, zero, upper2, [&](const Submodule& M2) {
      for (long long i = 0; i < M.npoints(); ++i)
        if (M1.basis[i].cols - M2.basis[i].cols != N.dim[i]) return false;
      Subquotient pres = subquotient(M1, M2);
      if (are_isomorphic(*pres.quotient, N).verdict == Tri::Yes) {
        found = true;
        return true;
      }
      return false;
    });
    return found;
  });
  return found;
}

}  // namespace pmod
