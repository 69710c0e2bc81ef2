#include "hopfkit/presets.hpp"

namespace hopfkit::presets {

const std::string& nullplane() {
    static const std::string source = R"hopf(// Null-plane quantum Poincare pair in (1+1) dimensions.
// U is the deformed enveloping algebra, F its dual function algebra.
algebra U {
  params: z;
  generators: K < Pm < Pp;
  relations:
    [K, Pp] = -(1/z)*(exp(-2*z*Pp) - 1);
    [K, Pm] = -2*Pm;
    [Pp, Pm] = 0;
  coproduct:
    Pp -> Pp (x) 1 + 1 (x) Pp;
    Pm -> Pm (x) 1 + exp(-2*z*Pp) (x) Pm;
    K  -> K (x) 1 + exp(-2*z*Pp) (x) K;
  counit:
    Pp -> 0;
    Pm -> 0;
    K  -> 0;
  antipode:
    Pp -> -Pp;
    Pm -> -exp(2*z*Pp)*Pm;
    K  -> -exp(2*z*Pp)*K;
}
algebra F {
  params: z;
  generators: phi < am < ap;
  relations:
    [ap, am] = -2*z*am;
    [ap, phi] = z*(exp(-2*phi) - 1);
    [am, phi] = 0;
  coproduct:
    ap  -> ap (x) exp(-2*phi) + 1 (x) ap;
    am  -> am (x) exp(2*phi) + 1 (x) am;
    phi -> phi (x) 1 + 1 (x) phi;
  counit:
    ap  -> 0;
    am  -> 0;
    phi -> 0;
  antipode:
    ap  -> -ap*exp(2*phi);
    am  -> -am*exp(-2*phi);
    phi -> -phi;
}
pairing U F { K ~ phi, Pm ~ am, Pp ~ ap }
)hopf";
    return source;
}

const std::string& kgalilei() {
    static const std::string source = R"hopf(// kappa-Galilei pair in (1+1) dimensions.
// The formal parameter is w = 1/kappa-tilde, so w -> 0 is the classical limit.
algebra U {
  params: w;
  generators: K < P < H;
  relations:
    [H, K] = -P;
    [P, K] = (w/2)*P^2;
    [H, P] = 0;
  coproduct:
    H -> H (x) 1 + 1 (x) H;
    P -> P (x) 1 + exp(-w*H) (x) P;
    K -> K (x) 1 + exp(-w*H) (x) K;
  counit:
    H -> 0;
    P -> 0;
    K -> 0;
  antipode:
    H -> -H;
    P -> -exp(w*H)*P;
    K -> -exp(w*H)*K;
}
algebra F {
  params: w;
  generators: v < x < t;
  relations:
    [t, x] = -w*x;
    [x, v] = (w/2)*v^2;
    [t, v] = -w*v;
  coproduct:
    v -> v (x) 1 + 1 (x) v;
    x -> x (x) 1 + 1 (x) x - t (x) v;
    t -> t (x) 1 + 1 (x) t;
  counit:
    v -> 0;
    x -> 0;
    t -> 0;
  antipode:
    v -> -v;
    x -> -x - t*v;
    t -> -t;
}
pairing U F { K ~ v, P ~ x, H ~ t }
)hopf";
    return source;
}

}  // namespace hopfkit::presets
