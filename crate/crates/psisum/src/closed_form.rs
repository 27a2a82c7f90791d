//! Sparse exact linear combinations over the basis of named constants
//! {1, γ, π, log 2, β(2k), ζ(2k+1)}.
//!
//! Coefficient-wise equality is the only notion of equality here; the basis
//! constants are treated as independent and no simplification across symbols
//! is ever attempted.

use crate::error::{Error, Result};
use crate::rational::Rational;
use serde_json::{Map, Value};
use std::collections::BTreeMap;
use std::fmt;

/// One named constant of the coefficient basis.
///
/// Catalan's constant is always `Beta(2)`; the variant order defines the
/// canonical serialization order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum BasisSymbol {
    One,
    EulerGamma,
    Pi,
    Log2,
    /// Dirichlet beta at an even integer >= 2.
    Beta(u32),
    /// Riemann zeta at an odd integer >= 3.
    ZetaOdd(u32),
}

impl BasisSymbol {
    /// β(k) for even k >= 2. Panics on a malformed index.
    pub fn beta(k: u32) -> Self {
        assert!(k >= 2 && k % 2 == 0, "beta index must be even and >= 2, got {k}");
        BasisSymbol::Beta(k)
    }

    /// ζ(s) for odd s >= 3. Panics on a malformed index.
    pub fn zeta_odd(s: u32) -> Self {
        assert!(s >= 3 && s % 2 == 1, "zeta index must be odd and >= 3, got {s}");
        BasisSymbol::ZetaOdd(s)
    }

    pub fn is_well_formed(&self) -> bool {
        match self {
            BasisSymbol::Beta(k) => *k >= 2 && *k % 2 == 0,
            BasisSymbol::ZetaOdd(s) => *s >= 3 && *s % 2 == 1,
            _ => true,
        }
    }

    /// Canonical lowercase token used in text and JSON serialization.
    pub fn token(&self) -> String {
        match self {
            BasisSymbol::One => "one".into(),
            BasisSymbol::EulerGamma => "gamma".into(),
            BasisSymbol::Pi => "pi".into(),
            BasisSymbol::Log2 => "log2".into(),
            BasisSymbol::Beta(k) => format!("beta{k}"),
            BasisSymbol::ZetaOdd(s) => format!("zeta{s}"),
        }
    }

    /// Human-oriented name; β(2) is shown as G.
    pub fn pretty(&self) -> String {
        match self {
            BasisSymbol::One => "1".into(),
            BasisSymbol::EulerGamma => "gamma".into(),
            BasisSymbol::Pi => "pi".into(),
            BasisSymbol::Log2 => "log2".into(),
            BasisSymbol::Beta(2) => "G".into(),
            BasisSymbol::Beta(k) => format!("beta({k})"),
            BasisSymbol::ZetaOdd(s) => format!("zeta({s})"),
        }
    }

    /// LaTeX fragment; β(2) is written G to match the usual presentation.
    pub fn latex(&self) -> String {
        match self {
            BasisSymbol::One => "1".into(),
            BasisSymbol::EulerGamma => r"\gamma".into(),
            BasisSymbol::Pi => r"\pi".into(),
            BasisSymbol::Log2 => r"\log 2".into(),
            BasisSymbol::Beta(2) => "G".into(),
            BasisSymbol::Beta(k) => format!(r"\beta({k})"),
            BasisSymbol::ZetaOdd(s) => format!(r"\zeta({s})"),
        }
    }
}

/// Sparse exact linear combination of basis constants.
///
/// Zero coefficients are never stored, so derived equality is canonical.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ClosedForm {
    coeffs: BTreeMap<BasisSymbol, Rational>,
}

impl ClosedForm {
    pub fn zero() -> Self {
        ClosedForm::default()
    }

    /// The pure rational form c * 1.
    pub fn constant(c: Rational) -> Self {
        Self::single(BasisSymbol::One, c)
    }

    pub fn single(sym: BasisSymbol, c: Rational) -> Self {
        let mut f = ClosedForm::zero();
        f.add_term(sym, &c);
        f
    }

    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (BasisSymbol, Rational)>,
    {
        let mut f = ClosedForm::zero();
        for (sym, c) in pairs {
            f.add_term(sym, &c);
        }
        f
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `sym`; zero when absent.
    pub fn coeff(&self, sym: BasisSymbol) -> Rational {
        self.coeffs.get(&sym).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisSymbol, &Rational)> {
        self.coeffs.iter()
    }

    pub fn symbols(&self) -> impl Iterator<Item = BasisSymbol> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn add_term(&mut self, sym: BasisSymbol, c: &Rational) {
        debug_assert!(sym.is_well_formed());
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(sym).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&sym);
        }
    }

    /// self += scale * other, exactly.
    pub fn add_scaled(&mut self, scale: &Rational, other: &ClosedForm) {
        if scale.is_zero() {
            return;
        }
        for (sym, c) in other.iter() {
            self.add_term(*sym, &(scale * c));
        }
    }

    pub fn scaled(&self, k: &Rational) -> ClosedForm {
        let mut out = ClosedForm::zero();
        out.add_scaled(k, self);
        out
    }

    /// Σ scale_i * form_i with exact coefficients and zero entries pruned.
    pub fn combine(terms: &[(Rational, ClosedForm)]) -> ClosedForm {
        let mut out = ClosedForm::zero();
        for (scale, form) in terms {
            out.add_scaled(scale, form);
        }
        out
    }

    /// Solves a*x + b = c for x, i.e. x = (c - b)/a, exactly.
    pub fn solve_linear(a: &Rational, b: &ClosedForm, c: &ClosedForm) -> Result<ClosedForm> {
        if a.is_zero() {
            return Err(Error::ZeroCoefficient);
        }
        let mut diff = c.clone();
        diff.add_scaled(&-Rational::one(), b);
        Ok(diff.scaled(&a.recip()))
    }

    /// Σ |coefficient|; used to size precision headroom for evaluation.
    pub fn coeff_l1(&self) -> Rational {
        let mut acc = Rational::zero();
        for (_, c) in self.iter() {
            acc += &c.abs();
        }
        acc
    }

    /// Canonical text: symbols in basis order, coefficients always `num/den`.
    /// Bit-identical across runs for equal forms.
    pub fn canonical_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (sym, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs().frac_string();
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if *sym == BasisSymbol::One {
                out.push_str(&mag);
            } else {
                out.push_str(&format!("{mag}*{}", sym.token()));
            }
        }
        out
    }

    /// Canonical JSON object, e.g. {"one":"3/1","log2":"-3/1","beta2":"-1/1"}.
    /// Key order follows the basis order.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (sym, c) in self.coeffs.iter() {
            map.insert(sym.token(), Value::String(c.frac_string()));
        }
        Value::Object(map)
    }

    /// LaTeX rendering in canonical order; β(2) appears as G, ζ(s) as \zeta(s).
    pub fn latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (sym, c)) in self.coeffs.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.abs();
            let coeff_tex = if mag.is_integer() {
                format!("{}", mag.numer())
            } else {
                format!(r"\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
            };
            if *sym == BasisSymbol::One {
                out.push_str(&coeff_tex);
            } else if mag.is_one() {
                out.push_str(&sym.latex());
            } else {
                out.push_str(&format!(r"{coeff_tex} {}", sym.latex()));
            }
        }
        out
    }
}

impl fmt::Display for ClosedForm {
    /// Human form: `3 - 3*log2 - G`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (sym, c)) in self.coeffs.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if *sym == BasisSymbol::One {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", sym.pretty())?;
            } else {
                write!(f, "{mag}*{}", sym.pretty())?;
            }
        }
        Ok(())
    }
}
