//! Exact closed forms for the polygamma combinations that appear on the left
//! side of the anchored identities.
//!
//! The left side at derivative order m is
//!
//!   L_m(x0) = ψ^(m)(1+x0) + (−1)^m ψ^(m)(1−x0)   (plus 2γ when m = 0).
//!
//! It reduces to basis constants in two steps:
//!
//!   1. shift: ψ^(m)(1+x) = ψ^(m)(x) + (−1)^m m!/x^(m+1);
//!   2. resolve the remaining combination at the anchor:
//!      * x0 = 1/4:   ψ^(2k−1)(1/4) − ψ^(2k−1)(3/4) = (2k−1)! 2^{4k} β(2k)
//!                    ψ^(2k)(1/4) + ψ^(2k)(3/4) = −(2k)! 2^{2k+1}(2^{2k+1}−1) ζ(2k+1)
//!        and for m = 0 the explicit digamma values at 1/4 and 3/4;
//!      * x0 = 1/2:   for odd m the two ψ^(m)(1/2) cancel and a pure rational
//!        remains; for even m >= 2,
//!                    ψ^(m)(1/2) = (−1)^{m+1} m! (2^{m+1} − 1) ζ(m+1),
//!        and for m = 0 the value ψ(1/2) = −γ − 2 log 2.
//!
//! γ and π enter only through the order-0 digamma values and must cancel in
//! every derived identity; they are kept as first-class symbols so that the
//! cancellation is observable rather than assumed.

use crate::closed_form::{BasisSymbol, ClosedForm};
use crate::expr::Anchor;
use crate::rational::{factorial, pow2, Rational};

/// Exact digamma values used by the order-0 reduction:
/// ψ(1/4) = −γ − π/2 − 3 log 2, ψ(3/4) = −γ + π/2 − 3 log 2,
/// ψ(1/2) = −γ − 2 log 2. Returns None off the table.
pub fn digamma_value(point: &Rational) -> Option<ClosedForm> {
    let quarter = Rational::new(1, 4);
    let three_quarters = Rational::new(3, 4);
    let half = Rational::new(1, 2);
    if *point == quarter {
        Some(ClosedForm::from_pairs([
            (BasisSymbol::EulerGamma, Rational::from_int(-1)),
            (BasisSymbol::Pi, Rational::new(-1, 2)),
            (BasisSymbol::Log2, Rational::from_int(-3)),
        ]))
    } else if *point == three_quarters {
        Some(ClosedForm::from_pairs([
            (BasisSymbol::EulerGamma, Rational::from_int(-1)),
            (BasisSymbol::Pi, Rational::new(1, 2)),
            (BasisSymbol::Log2, Rational::from_int(-3)),
        ]))
    } else if *point == half {
        Some(ClosedForm::from_pairs([
            (BasisSymbol::EulerGamma, Rational::from_int(-1)),
            (BasisSymbol::Log2, Rational::from_int(-2)),
        ]))
    } else {
        None
    }
}

/// Exact closed form of (d/dx)^m [ψ(1+x) + ψ(1−x) + 2γ] at the anchor.
pub fn polygamma_combination(order: u32, anchor: Anchor) -> ClosedForm {
    let m = order;
    if m == 0 {
        // ψ(1+x0) + ψ(1−x0) + 2γ with ψ(1+x0) = ψ(x0) + 1/x0
        let x0 = anchor.x0();
        let one_minus = &Rational::one() - &x0;
        let mut f = digamma_value(&x0).expect("anchor digamma value");
        f.add_scaled(&Rational::one(), &digamma_value(&one_minus).expect("anchor digamma value"));
        f.add_term(BasisSymbol::One, &x0.recip());
        f.add_term(BasisSymbol::EulerGamma, &Rational::from_int(2));
        return f;
    }

    let mfact = factorial(m);
    let sign = if m % 2 == 0 { 1 } else { -1 };
    match anchor {
        Anchor::Quarter => {
            // shift term (−1)^m m! / (1/4)^(m+1) = (−1)^m m! 4^(m+1)
            let shift = Rational::from_bigint(&mfact * sign) * Rational::from_bigint(pow2(2 * (m + 1)));
            let mut f = ClosedForm::constant(shift);
            if m % 2 == 1 {
                // ψ^(m)(1/4) − ψ^(m)(3/4) = m! 2^(2(m+1)) β(m+1)
                let c = Rational::from_bigint(&mfact * pow2(2 * (m + 1)));
                f.add_term(BasisSymbol::beta(m + 1), &c);
            } else {
                // ψ^(m)(1/4) + ψ^(m)(3/4) = −m! 2^(m+1) (2^(m+1) − 1) ζ(m+1)
                let c = Rational::from_bigint(
                    -(&mfact * pow2(m + 1)) * (pow2(m + 1) - 1),
                );
                f.add_term(BasisSymbol::zeta_odd(m + 1), &c);
            }
            f
        }
        Anchor::Half => {
            // shift term (−1)^m m! 2^(m+1)
            let shift = Rational::from_bigint(&mfact * sign) * Rational::from_bigint(pow2(m + 1));
            if m % 2 == 1 {
                // the two ψ^(m)(1/2) cancel; only the shift survives
                ClosedForm::constant(shift)
            } else {
                // 2 ψ^(m)(1/2) = −2 m! (2^(m+1) − 1) ζ(m+1)
                let mut f = ClosedForm::constant(shift);
                let c = Rational::from_bigint(&mfact * -2 * (pow2(m + 1) - 1));
                f.add_term(BasisSymbol::zeta_odd(m + 1), &c);
                f
            }
        }
    }
}
