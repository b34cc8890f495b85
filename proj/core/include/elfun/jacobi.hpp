#pragma once

// Jacobian elliptic functions of real argument for any real parameter m.
//
// sn, cn, dn come from Bulirsch's descending-Landen procedure applied to the
// argument reduced modulo 2K(m).  m < 0 is mapped onto (0, 1) with the
// imaginary-modulus transformation and m > 1 with the reciprocal-parameter
// transformation, so every value is computed in real arithmetic.

#include <optional>
#include <string_view>

#include "elfun/numeric.hpp"

namespace elfun {

struct SnCnDn {
  double sn;
  double cn;
  double dn;
};

/// Two-letter quotient codes; sn, cn, dn are included as the basic three.
enum class GlaisherCode { sn, cn, dn, cd, cs, dc, ds, nc, nd, ns, sc, sd };

inline constexpr GlaisherCode kAllGlaisherCodes[] = {
    GlaisherCode::sn, GlaisherCode::cn, GlaisherCode::dn, GlaisherCode::cd,
    GlaisherCode::cs, GlaisherCode::dc, GlaisherCode::ds, GlaisherCode::nc,
    GlaisherCode::nd, GlaisherCode::ns, GlaisherCode::sc, GlaisherCode::sd};

std::string_view to_string(GlaisherCode code);
std::optional<GlaisherCode> parse_glaisher(std::string_view text);
Parity parity(GlaisherCode code);

SnCnDn sncndn(double x, double m);

/// Jacobi amplitude.  For m > 1 the amplitude stays inside
/// [-asin(1/sqrt m), asin(1/sqrt m)] and is returned as such.
ExtReal mjam(double x, double m);

ExtReal glaisher(GlaisherCode code, double x, double m);

inline ExtReal mjsn(double x, double m) { return glaisher(GlaisherCode::sn, x, m); }
inline ExtReal mjcn(double x, double m) { return glaisher(GlaisherCode::cn, x, m); }
inline ExtReal mjdn(double x, double m) { return glaisher(GlaisherCode::dn, x, m); }
inline ExtReal mjcd(double x, double m) { return glaisher(GlaisherCode::cd, x, m); }
inline ExtReal mjcs(double x, double m) { return glaisher(GlaisherCode::cs, x, m); }
inline ExtReal mjdc(double x, double m) { return glaisher(GlaisherCode::dc, x, m); }
inline ExtReal mjds(double x, double m) { return glaisher(GlaisherCode::ds, x, m); }
inline ExtReal mjnc(double x, double m) { return glaisher(GlaisherCode::nc, x, m); }
inline ExtReal mjnd(double x, double m) { return glaisher(GlaisherCode::nd, x, m); }
inline ExtReal mjns(double x, double m) { return glaisher(GlaisherCode::ns, x, m); }
inline ExtReal mjsc(double x, double m) { return glaisher(GlaisherCode::sc, x, m); }
inline ExtReal mjsd(double x, double m) { return glaisher(GlaisherCode::sd, x, m); }

}  // namespace elfun
