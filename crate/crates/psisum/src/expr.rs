//! The symbolic series algebra.
//!
//! A [`SumExpression`] is a finite list of terms
//!
//! ```text
//!     coeff * x^a * sum_{n>=1} n^w (n^2 - x^2)^(-b)
//! ```
//!
//! closed under differentiation in x. The seed is the expansion of
//! ψ(1+x) + ψ(1−x) + 2γ = −2x² Σ 1/(n(n²−x²)), and anchoring at x = 1/4 or
//! x = 1/2 turns an expression into exact rational coefficients on the
//! concrete sums Σ n^w (16n²−1)^(−b) resp. Σ n^w (4n²−1)^(−b).

use crate::rational::Rational;
use std::collections::BTreeMap;
use std::fmt;

/// One term `coeff * x^xpow * sum_{n>=1} n^weight (n^2-x^2)^(-bpow)`.
///
/// The represented series converges absolutely for |x| < 1 whenever
/// `weight <= 2*bpow - 2`, which every constructor enforces.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SumTerm {
    pub coeff: Rational,
    pub xpow: u32,
    pub weight: i64,
    pub bpow: u32,
}

impl SumTerm {
    pub fn new(coeff: Rational, xpow: u32, weight: i64, bpow: u32) -> Self {
        assert!(bpow >= 1, "bpow must be >= 1");
        assert!(
            weight <= 2 * bpow as i64 - 2,
            "divergent term: weight {weight} with bpow {bpow}"
        );
        SumTerm { coeff, xpow, weight, bpow }
    }

    fn key(&self) -> (u32, i64, u32) {
        (self.xpow, self.weight, self.bpow)
    }
}

/// Normalized list of [`SumTerm`]s: merged by (xpow, weight, bpow), zero
/// coefficients dropped, canonical order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SumExpression {
    terms: Vec<SumTerm>,
}

impl SumExpression {
    pub fn new(terms: Vec<SumTerm>) -> Self {
        let mut merged: BTreeMap<(u32, i64, u32), Rational> = BTreeMap::new();
        for t in terms {
            let entry = merged.entry(t.key()).or_insert_with(Rational::zero);
            *entry += &t.coeff;
        }
        SumExpression {
            terms: merged
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((xpow, weight, bpow), coeff)| SumTerm { coeff, xpow, weight, bpow })
                .collect(),
        }
    }

    pub fn terms(&self) -> &[SumTerm] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Truncated floating-point evaluation at a concrete x, summing each series
    /// to `n_terms`. A test and diagnostics helper, not part of the certified
    /// numeric path.
    pub fn eval_f64(&self, x: f64, n_terms: u64) -> f64 {
        let mut total = 0.0;
        for t in &self.terms {
            let mut s = 0.0;
            // small terms first for accuracy
            for n in (1..=n_terms).rev() {
                let nf = n as f64;
                s += nf.powi(t.weight as i32) / (nf * nf - x * x).powi(t.bpow as i32);
            }
            total += t.coeff.to_f64() * x.powi(t.xpow as i32) * s;
        }
        total
    }
}

impl fmt::Display for SumExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(
                f,
                "{}*x^{}*S[n^{}/(n^2-x^2)^{}]",
                t.coeff, t.xpow, t.weight, t.bpow
            )?;
        }
        Ok(())
    }
}

/// The reflection series: ψ(1+x) + ψ(1−x) + 2γ = −2x² Σ 1/(n(n²−x²)),
/// i.e. the single term (coeff −2, xpow 2, weight −1, bpow 1).
pub fn base_expression() -> SumExpression {
    SumExpression::new(vec![SumTerm::new(Rational::from_int(-2), 2, -1, 1)])
}

/// Term-by-term derivative in x.
///
/// d/dx [x^a (n²−x²)^(−b)] = a x^(a−1) (n²−x²)^(−b) + 2b x^(a+1) (n²−x²)^(−b−1);
/// the weight of n is untouched.
pub fn differentiate(expr: &SumExpression) -> SumExpression {
    let mut out = Vec::new();
    for t in expr.terms() {
        if t.xpow >= 1 {
            out.push(SumTerm::new(
                &t.coeff * &Rational::from_int(t.xpow as i64),
                t.xpow - 1,
                t.weight,
                t.bpow,
            ));
        }
        out.push(SumTerm::new(
            &t.coeff * &Rational::from_int(2 * t.bpow as i64),
            t.xpow + 1,
            t.weight,
            t.bpow + 1,
        ));
    }
    SumExpression::new(out)
}

/// Moves powers of x into the summand via
///
///   x² · n^w (n²−x²)^(−b) = n^(w+2) (n²−x²)^(−b) − n^w (n²−x²)^(−(b−1))
///
/// until every reducible term has xpow <= 1. The represented function is
/// unchanged. A rewrite that would drop to bpow = 0 while the leftover series
/// Σ n^w diverges (w >= −1) is not applied; such terms keep xpow >= 2.
pub fn reduce_weight(expr: &SumExpression) -> SumExpression {
    let mut done = Vec::new();
    let mut work: Vec<SumTerm> = expr.terms().to_vec();
    while let Some(t) = work.pop() {
        // both pieces of the rewrite converge exactly when w <= 2b - 4; for
        // b = 1 this is the "bpow would hit 0 with weight >= -1" refusal
        let reducible = t.xpow >= 2 && t.weight <= 2 * t.bpow as i64 - 4;
        if reducible {
            work.push(SumTerm::new(t.coeff.clone(), t.xpow - 2, t.weight + 2, t.bpow));
            work.push(SumTerm::new(-&t.coeff, t.xpow - 2, t.weight, t.bpow - 1));
        } else {
            done.push(t);
        }
    }
    SumExpression::new(done)
}

/// Evaluation point of an identity: x = 1/4 (denominators 16n²−1) or
/// x = 1/2 (denominators 4n²−1).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Anchor {
    Quarter,
    Half,
}

impl Anchor {
    pub fn x0(&self) -> Rational {
        match self {
            Anchor::Quarter => Rational::new(1, 4),
            Anchor::Half => Rational::new(1, 2),
        }
    }

    /// The factor s with n² − x₀² = (s n² − 1)/s.
    pub fn denom_scale(&self) -> u32 {
        match self {
            Anchor::Quarter => 16,
            Anchor::Half => 4,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Anchor::Quarter => "quarter",
            Anchor::Half => "half",
        }
    }
}

impl fmt::Display for Anchor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Identifies the concrete numeric sum Σ_{n>=1} n^w / (s n² − 1)^b after the
/// anchor's scale factor has been cleared.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct SumIndex {
    pub weight: i64,
    pub bpow: u32,
    pub anchor: Anchor,
}

impl SumIndex {
    pub fn new(weight: i64, bpow: u32, anchor: Anchor) -> Self {
        assert!(bpow >= 1, "bpow must be >= 1");
        assert!(
            weight == -1 || (weight >= 1 && weight % 2 == 1),
            "weight must be -1 or a positive odd integer, got {weight}"
        );
        SumIndex { weight, bpow, anchor }
    }

    /// Absolute convergence: weight − 2·bpow <= −2.
    pub fn is_convergent(&self) -> bool {
        self.weight - 2 * self.bpow as i64 <= -2
    }

    /// The summand as display text, e.g. `1/(n*(16n^2-1)^2)`.
    pub fn summand(&self) -> String {
        let s = self.anchor.denom_scale();
        let den = if self.bpow == 1 {
            format!("({s}n^2-1)")
        } else {
            format!("({s}n^2-1)^{}", self.bpow)
        };
        match self.weight {
            -1 => format!("1/(n*{den})"),
            1 => format!("n/{den}"),
            w => format!("n^{w}/{den}"),
        }
    }
}

impl fmt::Display for SumIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sum_{{n>=1}} {}", self.summand())
    }
}

/// Specializes an expression at an anchor.
///
/// With x₀² = 1/s one has (n² − x₀²)^(−b) = s^b (s n² − 1)^(−b), so the term
/// (c, a, w, b) contributes c · x₀^a · s^b to the index (w, b).
pub fn anchor_coefficients(
    expr: &SumExpression,
    anchor: Anchor,
) -> BTreeMap<SumIndex, Rational> {
    let x0 = anchor.x0();
    let s = Rational::from_int(anchor.denom_scale() as i64);
    let mut out: BTreeMap<SumIndex, Rational> = BTreeMap::new();
    for t in expr.terms() {
        let idx = SumIndex::new(t.weight, t.bpow, anchor);
        let contrib = &(&t.coeff * &x0.pow(t.xpow as i32)) * &s.pow(t.bpow as i32);
        let entry = out.entry(idx).or_insert_with(Rational::zero);
        *entry += &contrib;
        if entry.is_zero() {
            out.remove(&idx);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn term(c: i64, a: u32, w: i64, b: u32) -> SumTerm {
        SumTerm::new(Rational::from_int(c), a, w, b)
    }

    #[test]
    fn base_is_the_reflection_series() {
        let base = base_expression();
        assert_eq!(base.terms(), &[term(-2, 2, -1, 1)]);
    }

    #[test]
    fn first_derivative_of_base() {
        let d = differentiate(&base_expression());
        assert_eq!(d.terms(), &[term(-4, 1, -1, 1), term(-4, 3, -1, 2)]);
    }

    #[test]
    fn derivative_of_constant_x_power_term() {
        // x^0 term has no power-rule part
        let e = SumExpression::new(vec![term(5, 0, -1, 3)]);
        assert_eq!(differentiate(&e).terms(), &[term(30, 1, -1, 4)]);
    }

    #[test]
    fn second_derivative_matches_scaled_coefficient_pattern() {
        // In the p = 2x variable each term c*x^a*(n^2-x^2)^(-b) becomes
        // (c*4^b/2^a) * p^a * (4n^2-p^2)^(-b); the second derivative of the
        // base must give the pattern -16, -80, -64 on b = 1, 2, 3.
        let d2 = differentiate(&differentiate(&base_expression()));
        assert_eq!(
            d2.terms(),
            &[term(-4, 0, -1, 1), term(-20, 2, -1, 2), term(-16, 4, -1, 3)]
        );
        let pattern: Vec<(u32, Rational)> = d2
            .terms()
            .iter()
            .map(|t| {
                let p_coeff = &(&t.coeff * &Rational::from_int(4).pow(t.bpow as i32))
                    / &Rational::from_int(2).pow(t.xpow as i32);
                (t.bpow, p_coeff)
            })
            .collect();
        assert_eq!(
            pattern,
            vec![
                (1, Rational::from_int(-16)),
                (2, Rational::from_int(-80)),
                (3, Rational::from_int(-64)),
            ]
        );
    }

    #[test]
    fn weight_is_preserved_by_differentiation() {
        let mut e = base_expression();
        for _ in 0..5 {
            e = differentiate(&e);
            assert!(e.terms().iter().all(|t| t.weight == -1));
        }
    }

    #[test]
    fn reduce_first_derivative_to_single_weighted_term() {
        let d = differentiate(&base_expression());
        let red = reduce_weight(&d);
        assert_eq!(red.terms(), &[term(-4, 1, 1, 2)]);
    }

    #[test]
    fn reduce_fixes_low_x_powers_and_keeps_blocked_terms() {
        let e = SumExpression::new(vec![term(7, 1, -1, 2)]);
        assert_eq!(reduce_weight(&e), e);
        // the base term itself is blocked: bpow would drop to 0 with weight -1
        assert_eq!(reduce_weight(&base_expression()), base_expression());
    }

    #[test]
    fn reduce_second_derivative_normal_form() {
        let d2 = differentiate(&differentiate(&base_expression()));
        let red = reduce_weight(&d2);
        assert_eq!(red.terms(), &[term(12, 0, 1, 2), term(-16, 0, 3, 3)]);
    }

    #[test]
    fn reduction_preserves_numeric_value() {
        let d2 = differentiate(&differentiate(&base_expression()));
        let red = reduce_weight(&d2);
        for &x in &[0.13, 0.3, 0.45] {
            let n = 10_000;
            let a = d2.eval_f64(x, n);
            let b = red.eval_f64(x, n);
            // truncation tails differ between the two forms; both are O(1/N^2) here
            assert!((a - b).abs() < 1e-6, "x={x}: {a} vs {b}");
        }
    }

    #[test]
    fn anchoring_base_gives_minus_two_on_leading_sum() {
        for anchor in [Anchor::Quarter, Anchor::Half] {
            let m = anchor_coefficients(&base_expression(), anchor);
            assert_eq!(m.len(), 1);
            assert_eq!(
                m[&SumIndex::new(-1, 1, anchor)],
                Rational::from_int(-2)
            );
        }
    }

    #[test]
    fn anchoring_first_derivative_gives_minus_sixteen_twice() {
        let d = differentiate(&base_expression());
        let m = anchor_coefficients(&d, Anchor::Quarter);
        assert_eq!(m[&SumIndex::new(-1, 1, Anchor::Quarter)], Rational::from_int(-16));
        assert_eq!(m[&SumIndex::new(-1, 2, Anchor::Quarter)], Rational::from_int(-16));
    }

    #[test]
    fn normalization_merges_and_prunes() {
        let e = SumExpression::new(vec![term(2, 1, -1, 2), term(-2, 1, -1, 2)]);
        assert!(e.is_empty());
    }

    #[test]
    fn convergence_classification() {
        assert!(SumIndex::new(-1, 1, Anchor::Quarter).is_convergent());
        assert!(SumIndex::new(1, 2, Anchor::Half).is_convergent());
        assert!(!SumIndex::new(1, 1, Anchor::Quarter).is_convergent());
        assert!(!SumIndex::new(3, 2, Anchor::Quarter).is_convergent());
    }

    #[test]
    #[should_panic(expected = "divergent term")]
    fn divergent_term_is_unrepresentable() {
        let _ = SumTerm::new(Rational::one(), 0, 1, 1);
    }

    #[test]
    fn derivative_matches_finite_difference() {
        // central difference of the truncated sums; orders 0..4
        let mut e = base_expression();
        for _order in 0..4 {
            let d = differentiate(&e);
            for &x in &[0.12f64, 0.27, 0.38] {
                let h = 1e-6;
                let n = 10_000;
                let fd = (e.eval_f64(x + h, n) - e.eval_f64(x - h, n)) / (2.0 * h);
                let exact = d.eval_f64(x, n);
                assert!(
                    (fd - exact).abs() < 1e-5,
                    "order mismatch at x={x}: fd={fd} exact={exact}"
                );
            }
            e = d;
        }
    }
}
