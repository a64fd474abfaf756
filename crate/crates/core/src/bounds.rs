//! Closed-form genus and slope bounds for hyperelliptic fibrations.
//!
//! Evaluators never refuse inputs that merely fall outside a theorem's
//! hypotheses; the resulting [`GenusBound`] carries `in_domain = false`
//! instead. The sharpness families sit exactly on those boundaries.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::SingularityIndices;
use crate::rational::{self, frac, int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(g: u32) -> Self {
        if g.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Which closed form produced a bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum BoundSource {
    /// `g <= 4 chi / (4 chi - K^2)` from the slope inequality alone.
    SlopeLinear,
    /// `g <= (4 chi + 4) / (2 + 4 chi - K^2)` when `lambda <= 4`.
    LowSlope,
    /// `g <= 2 chi + 1` over a rational base with `lambda > 4`.
    RationalBase,
    /// `g <= 25/4 chi^2 + 19/2 chi + 2` over an elliptic base with `lambda > 4`.
    EllipticBase,
    /// `g <= 16 chi^2 + 14 chi + 2` over a base of genus `>= 2`.
    HigherGenusBase,
    /// The sharp bound in terms of slope, `chi` and a fixed `n`.
    SharpInN { n: i64 },
    /// Large-genus refinement, even `g`.
    LargeGenusEven,
    /// Large-genus refinement, odd `g`.
    LargeGenusOdd,
    /// Large-genus refinement at `lambda = 9` (elliptic base).
    EllipticBaseByParity { parity: Parity },
    /// Large-genus refinement at `lambda = 12` (base genus `>= 2`).
    HigherBaseByParity { parity: Parity },
    /// `g <= chi(O_S) / (b - 1) + 1` from semi-positivity of the Hodge bundle.
    HodgePositivity,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundParams {
    #[serde(with = "rational::opt_rational_str", default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Rational>,
    #[serde(with = "rational::opt_rational_str", default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(with = "rational::opt_rational_str", default, skip_serializing_if = "Option::is_none")]
    pub ksq: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusBound {
    #[serde(with = "rational::rational_str")]
    pub value: Rational,
    #[serde(with = "rational::bigint_str")]
    pub floor_value: BigInt,
    pub source: BoundSource,
    pub params: BoundParams,
    /// Whether the inputs satisfy the hypotheses of the bound.
    pub in_domain: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl GenusBound {
    fn new(value: Rational, source: BoundSource, params: BoundParams, in_domain: bool) -> Self {
        GenusBound {
            floor_value: rational::floor(&value),
            value,
            source,
            params,
            in_domain,
            note: None,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

fn require_genus(g: u32) -> Result<()> {
    if g < 2 {
        return Err(Error::Domain(format!("genus {g} < 2")));
    }
    Ok(())
}

fn require_positive(name: &str, v: &Rational) -> Result<()> {
    if !v.is_positive() {
        return Err(Error::Domain(format!("{name} = {} must be positive", rational::fmt_rational(v))));
    }
    Ok(())
}

/// `4(g-1)/g`.
pub fn slope_lower(g: u32) -> Result<Rational> {
    require_genus(g)?;
    let g = g as i64;
    Ok(frac(4 * (g - 1), g))
}

/// `12 - (8g+4)/g^2` for even `g`, `12 - (8g+4)/(g^2-1)` for odd `g`.
pub fn hyperelliptic_slope_cap(g: u32) -> Result<Rational> {
    require_genus(g)?;
    let gi = g as i64;
    let den = if g.is_multiple_of(2) { gi * gi } else { gi * gi - 1 };
    Ok(int(12) - frac(8 * gi + 4, den))
}

/// Slope cap; over an elliptic base the Miyaoka-Yau cap 9 also applies.
pub fn slope_upper(g: u32, b: u32) -> Result<Rational> {
    let cap = hyperelliptic_slope_cap(g)?;
    Ok(if b == 1 { cap.min(int(9)) } else { cap })
}

/// `(lambda-4)^2/(4n) chi^2 + (lambda - 4 + lambda/(2n)) chi + n + 1`.
pub fn g_bound_fn(lambda: &Rational, chi: &Rational, n: i64) -> Result<Rational> {
    if n <= 0 {
        return Err(Error::Domain(format!("n = {n} must be positive")));
    }
    let n_r = int(n);
    let d = lambda - int(4);
    Ok(&d * &d / (int(4) * &n_r) * chi * chi + (&d + lambda / (int(2) * &n_r)) * chi + n_r + int(1))
}

/// [`g_bound_fn`] wrapped with provenance. Inputs with `lambda <= 4` are
/// accepted and flagged out of domain.
pub fn sharp_bound(lambda: &Rational, chi: &Rational, n: i64) -> Result<GenusBound> {
    let value = g_bound_fn(lambda, chi, n)?;
    let in_domain = lambda > &int(4) && chi.is_positive();
    let mut gb = GenusBound::new(
        value,
        BoundSource::SharpInN { n },
        BoundParams {
            lambda: Some(lambda.clone()),
            chi: Some(chi.clone()),
            n: Some(n),
            ..Default::default()
        },
        in_domain,
    );
    if !in_domain {
        gb = gb.with_note("evaluated outside lambda > 4");
    }
    Ok(gb)
}

/// Cap on `n`: `((lambda-4)/2 + lambda/(g-1)) chi`.
pub fn n_upper(lambda: &Rational, chi: &Rational, g: u32) -> Result<Rational> {
    require_genus(g)?;
    require_positive("chi", chi)?;
    if lambda <= &int(4) {
        return Err(Error::Domain(format!(
            "lambda = {} must exceed 4",
            rational::fmt_rational(lambda)
        )));
    }
    Ok(((lambda - int(4)) / int(2) + lambda / int(g as i64 - 1)) * chi)
}

/// `(4 chi + 4) / (2 + 4 chi - K^2)`; errors when the denominator is not
/// positive, which means the slope is too large for this branch.
pub fn low_slope_bound(chi: &Rational, ksq: &Rational) -> Result<Rational> {
    let den = int(2) + int(4) * chi - ksq;
    if !den.is_positive() {
        return Err(Error::Domain(format!(
            "2 + 4chi - K^2 = {} is not positive; use the lambda > 4 branch",
            rational::fmt_rational(&den)
        )));
    }
    Ok((int(4) * chi + int(4)) / den)
}

/// `4 chi / (4 chi - K^2)`, defined when `K^2 < 4 chi`.
pub fn slope_linear_bound(chi: &Rational, ksq: &Rational) -> Result<GenusBound> {
    let den = int(4) * chi - ksq;
    if !den.is_positive() {
        return Err(Error::Domain("slope-linear bound needs K^2 < 4 chi".into()));
    }
    Ok(GenusBound::new(
        int(4) * chi / den,
        BoundSource::SlopeLinear,
        BoundParams {
            chi: Some(chi.clone()),
            ksq: Some(ksq.clone()),
            ..Default::default()
        },
        true,
    ))
}

/// Main genus bound for a locally non-trivial fibration.
///
/// With `ksq <= 4 chi` the low-slope branch applies; otherwise the bound
/// depends only on the base genus. For `b >= 2` prefer also reporting
/// [`hodge_bound`].
pub fn bound_theorem31(chi: &Rational, b: i64, ksq: Option<&Rational>) -> Result<GenusBound> {
    if b < 0 {
        return Err(Error::Domain(format!("base genus {b} < 0")));
    }
    require_positive("chi", chi)?;
    let params = BoundParams {
        chi: Some(chi.clone()),
        b: Some(b as u32),
        ksq: ksq.cloned(),
        ..Default::default()
    };
    if let Some(ksq) = ksq {
        if ksq <= &(int(4) * chi) {
            let value = low_slope_bound(chi, ksq)?;
            return Ok(GenusBound::new(value, BoundSource::LowSlope, params, true));
        }
    }
    let (value, source) = match b {
        0 => (int(2) * chi + int(1), BoundSource::RationalBase),
        1 => (
            frac(25, 4) * chi * chi + frac(19, 2) * chi + int(2),
            BoundSource::EllipticBase,
        ),
        _ => (
            int(16) * chi * chi + int(14) * chi + int(2),
            BoundSource::HigherGenusBase,
        ),
    };
    let gb = GenusBound::new(value, source, params, true);
    Ok(if ksq.is_none() {
        gb.with_note("assumes lambda > 4")
    } else {
        gb
    })
}

/// `g <= chi(O_S)/(b-1) + 1` for base genus `b >= 2`.
pub fn hodge_bound(chi_surface: &Rational, b: u32) -> Result<GenusBound> {
    if b < 2 {
        return Err(Error::Domain(format!("Hodge bound needs base genus >= 2, got {b}")));
    }
    Ok(GenusBound::new(
        chi_surface / int(b as i64 - 1) + int(1),
        BoundSource::HodgePositivity,
        BoundParams {
            chi: Some(chi_surface.clone()),
            b: Some(b),
            ..Default::default()
        },
        true,
    ))
}

/// Large-genus bound (`g >= 25`, `chi >= 4`), by parity of `g`.
pub fn bound_prop41(lambda: &Rational, chi: &Rational, parity: Parity) -> Rational {
    let d = lambda - int(4);
    match parity {
        Parity::Even => &d * &d / int(4) * chi * chi + (frac(3, 2) * lambda - int(4)) * chi + int(2),
        Parity::Odd => &d * &d / int(8) * chi * chi + (frac(5, 4) * lambda - int(4)) * chi + int(3),
    }
}

pub fn large_genus_bound(lambda: &Rational, chi: &Rational, parity: Parity) -> GenusBound {
    let source = match parity {
        Parity::Even => BoundSource::LargeGenusEven,
        Parity::Odd => BoundSource::LargeGenusOdd,
    };
    GenusBound::new(
        bound_prop41(lambda, chi, parity),
        source,
        BoundParams {
            lambda: Some(lambda.clone()),
            chi: Some(chi.clone()),
            ..Default::default()
        },
        lambda >= &int(4) && chi >= &int(4),
    )
    .with_note("requires g >= 25 and chi >= 4")
}

/// Large-genus bound with the slope replaced by its cap: 9 for `b = 1`,
/// 12 for `b >= 2`.
pub fn large_genus_bound_by_base(chi: &Rational, b: u32, parity: Parity) -> Result<GenusBound> {
    let (lambda, source) = match b {
        1 => (int(9), BoundSource::EllipticBaseByParity { parity }),
        b if b >= 2 => (int(12), BoundSource::HigherBaseByParity { parity }),
        _ => return Err(Error::Domain("needs base genus >= 1".into())),
    };
    Ok(GenusBound::new(
        bound_prop41(&lambda, chi, parity),
        source,
        BoundParams {
            chi: Some(chi.clone()),
            b: Some(b),
            ..Default::default()
        },
        chi >= &int(4),
    )
    .with_note("requires g >= 25 and chi >= 4"))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extremes {
    #[serde(with = "rational::rational_str")]
    pub min: Rational,
    pub argmin: i64,
    #[serde(with = "rational::rational_str")]
    pub max: Rational,
    pub argmax: i64,
}

/// Extremes of `n -> g_bound_fn(lambda, chi, n)` over `lo..=hi`.
///
/// The function is `A/n + n + const` with `A > 0`, so it is strictly convex:
/// the maximum sits at an endpoint and the minimum next to `sqrt(A)`. Ties
/// go to the smaller `n`.
pub fn gbound_extremes(lambda: &Rational, chi: &Rational, lo: i64, hi: i64) -> Result<Extremes> {
    if lo > hi {
        return Err(Error::EmptyRange(format!("n in {lo}..={hi}")));
    }
    if lo <= 0 {
        return Err(Error::Domain(format!("n range must be positive, starts at {lo}")));
    }
    require_positive("chi", chi)?;
    let eval = |n: i64| g_bound_fn(lambda, chi, n);

    let (g_lo, g_hi) = (eval(lo)?, eval(hi)?);
    let (max, argmax) = if g_hi > g_lo { (g_hi, hi) } else { (g_lo, lo) };

    let d = lambda - int(4);
    let a = &d * &d * chi * chi / int(4) + lambda * chi / int(2);
    let root = if a.is_positive() {
        rational::isqrt(&rational::floor(&a))
    } else {
        BigInt::zero()
    };
    let root = i64::try_from(root).unwrap_or(i64::MAX - 1);
    let mut best: Option<(Rational, i64)> = None;
    for cand in [lo, hi, root, root + 1] {
        let n = cand.clamp(lo, hi);
        let v = eval(n)?;
        best = match best {
            Some((bv, bn)) if bv < v || (bv == v && bn <= n) => Some((bv, bn)),
            _ => Some((v, n)),
        };
    }
    let (min, argmin) = best.expect("at least one candidate");
    Ok(Extremes {
        min,
        argmin,
        max,
        argmax,
    })
}

/// Coefficient of `s_j` in the lower bound for `chi_f`, before dividing by
/// `5g+4` (`b = 1`) or `8g+4` (`b >= 2`).
fn chi_lower_numerators(g: u32) -> Vec<(u32, i64)> {
    let gi = g as i64;
    let mut out = vec![(g + 2, gi * gi - 1)];
    for k in 1..=gi / 2 {
        out.push((2 * k as u32 + 1, (4 * k - 1) * gi - 4 * k * k));
    }
    for k in 2..=(gi + 1) / 2 {
        out.push((2 * k as u32, 2 * (k - 1) * (gi - k)));
    }
    out
}

fn chi_lower_denominator(g: u32, b: u32) -> Result<i64> {
    let gi = g as i64;
    match b {
        0 => Err(Error::Domain("chi lower bound needs base genus >= 1".into())),
        1 => Ok(5 * gi + 4),
        _ => Ok(8 * gi + 4),
    }
}

/// Lower bound on `chi_f` implied by the slope cap over a base of genus `b`
/// (non-strict for `b = 1`, strict for `b >= 2`).
pub fn chi_lower_from_indices(si: &SingularityIndices, b: u32) -> Result<Rational> {
    let g = si.genus();
    let den = chi_lower_denominator(g, b)?;
    let mut acc = Rational::zero();
    for (j, c) in chi_lower_numerators(g) {
        acc += int(c) * int(si.get(j));
    }
    Ok(acc / int(den))
}

/// Indices `j` whose single unit already pushes the lower bound past `chi`,
/// hence `s_j = 0` on every admissible vector.
pub fn forced_zero_indices(g: u32, chi: &Rational, b: u32) -> Result<BTreeSet<u32>> {
    require_genus(g)?;
    require_positive("chi", chi)?;
    let den = chi_lower_denominator(g, b)?;
    Ok(chi_lower_numerators(g)
        .into_iter()
        .filter(|&(_, c)| &frac(c, den) > chi)
        .map(|(j, _)| j)
        .collect())
}

/// Cap on `K^2` forced by a smooth rational `(-m)`-curve in a fibre:
/// `(m+1)^2/(3m) <= 4/3 (9 chi - K^2)`.
pub fn minus_curve_ksq_cap(m: i64, chi: &Rational) -> Result<Rational> {
    if m < 1 {
        return Err(Error::Domain(format!("self-intersection -m needs m >= 1, got {m}")));
    }
    require_positive("chi", chi)?;
    Ok(int(9) * chi - frac((m + 1) * (m + 1), 4 * m))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum GenusCap {
    Bounded {
        #[serde(with = "rational::rational_str")]
        value: Rational,
    },
    Unbounded,
    Infeasible,
}

/// Largest real `g > 1` with `(g-2)/(2(g-1)) <= K^2 - (8g-14)/(g-1) chi`,
/// the inequality that holds whenever `s_2 < 0`.
pub fn s2_negative_genus_cap(ksq: &Rational, chi: &Rational) -> Result<GenusCap> {
    require_positive("chi", chi)?;
    // Clearing 2(g-1) > 0: g (1 + 16 chi - 2K^2) <= 2 - 2K^2 + 28 chi.
    let slope = int(1) + int(16) * chi - int(2) * ksq;
    let rhs = int(2) - int(2) * ksq + int(28) * chi;
    Ok(if slope.is_positive() {
        GenusCap::Bounded { value: rhs / slope }
    } else if slope.is_zero() {
        if rhs.is_negative() {
            GenusCap::Infeasible
        } else {
            GenusCap::Unbounded
        }
    } else {
        GenusCap::Unbounded
    })
}

/// Direct check of the `s_2 < 0` inequality at a given genus.
pub fn s2_negative_inequality_holds(g: u32, ksq: &Rational, chi: &Rational) -> bool {
    let gi = g as i64;
    frac(gi - 2, 2 * (gi - 1)) <= ksq - frac(8 * gi - 14, gi - 1) * chi
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{chi_from_indices, slope_excess};
    use proptest::prelude::*;

    #[test]
    fn slope_lower_examples() {
        assert_eq!(slope_lower(2).unwrap(), int(2));
        assert_eq!(slope_lower(4).unwrap(), int(3));
        for g in 2..500 {
            assert!(slope_lower(g).unwrap() < int(4));
        }
        assert!(slope_lower(1).is_err());
    }

    #[test]
    fn slope_upper_examples() {
        assert_eq!(slope_upper(2, 2).unwrap(), int(7));
        assert_eq!(slope_upper(3, 2).unwrap(), frac(17, 2));
        assert_eq!(slope_upper(20, 1).unwrap(), int(9));
        for g in 2..300 {
            assert!(slope_upper(g, 1).unwrap() <= int(9));
            assert!(slope_upper(g, 3).unwrap() < int(12));
            assert!(slope_lower(g).unwrap() < slope_upper(g, 1).unwrap().max(int(4)));
        }
        assert!(slope_upper(1, 1).is_err());
    }

    #[test]
    fn g_bound_fn_examples() {
        assert_eq!(g_bound_fn(&int(4), &int(4), 2).unwrap(), int(7));
        assert_eq!(g_bound_fn(&frac(22, 5), &int(5), 1).unwrap(), int(16));
        assert_eq!(g_bound_fn(&int(9), &int(1), 1).unwrap(), frac(71, 4));
        assert!(g_bound_fn(&int(9), &int(1), 0).is_err());
        let gb = sharp_bound(&int(4), &int(4), 2).unwrap();
        assert!(!gb.in_domain);
        assert!(sharp_bound(&int(9), &int(1), 1).unwrap().in_domain);
    }

    #[test]
    fn n_upper_examples() {
        assert_eq!(n_upper(&int(9), &int(1), 18).unwrap(), frac(103, 34));
        assert_eq!(n_upper(&int(5), &int(2), 3).unwrap(), int(6));
        for g in 18..200 {
            assert!(n_upper(&int(9), &int(1), g).unwrap() < int(4));
        }
        assert!(n_upper(&int(4), &int(1), 5).is_err());
        assert!(n_upper(&int(5), &int(0), 5).is_err());
    }

    #[test]
    fn theorem31_examples() {
        let gb = bound_theorem31(&int(1), 1, None).unwrap();
        assert_eq!(gb.value, frac(71, 4));
        assert_eq!(gb.floor_value, BigInt::from(17));
        assert_eq!(gb.source, BoundSource::EllipticBase);

        let gb = bound_theorem31(&int(6), 1, Some(&int(24))).unwrap();
        assert_eq!(gb.value, int(14));
        assert_eq!(gb.source, BoundSource::LowSlope);

        assert_eq!(bound_theorem31(&int(3), 0, None).unwrap().value, int(7));
        assert_eq!(
            bound_theorem31(&int(2), 3, None).unwrap().value,
            int(16 * 4 + 28 + 2)
        );
        assert!(bound_theorem31(&int(1), -1, None).is_err());

        // K^2 = 4 chi recovers 2 chi + 2.
        for chi in 1..30 {
            let gb = bound_theorem31(&int(chi), 1, Some(&int(4 * chi))).unwrap();
            assert_eq!(gb.value, int(2 * chi + 2));
        }
        assert!(low_slope_bound(&int(1), &int(7)).is_err());
    }

    #[test]
    fn hodge_examples() {
        assert_eq!(hodge_bound(&int(1), 2).unwrap().value, int(2));
        assert_eq!(hodge_bound(&int(6), 4).unwrap().value, int(3));
        assert!(hodge_bound(&int(1), 1).is_err());
    }

    #[test]
    fn prop41_examples() {
        assert_eq!(bound_prop41(&int(9), &int(4), Parity::Even), int(140));
        assert_eq!(bound_prop41(&int(9), &int(4), Parity::Odd), int(82));
        for chi in 1..20 {
            assert_eq!(bound_prop41(&int(4), &int(chi), Parity::Even), int(2 * chi + 2));
        }
        // Cap instantiations.
        let chi = int(5);
        assert_eq!(
            large_genus_bound_by_base(&chi, 1, Parity::Even).unwrap().value,
            frac(25, 4) * int(25) + frac(19, 2) * int(5) + int(2)
        );
        assert_eq!(
            large_genus_bound_by_base(&chi, 1, Parity::Odd).unwrap().value,
            frac(25, 8) * int(25) + frac(29, 4) * int(5) + int(3)
        );
        assert_eq!(
            large_genus_bound_by_base(&chi, 2, Parity::Even).unwrap().value,
            int(16 * 25 + 14 * 5 + 2)
        );
        assert_eq!(
            large_genus_bound_by_base(&chi, 2, Parity::Odd).unwrap().value,
            int(8 * 25 + 11 * 5 + 3)
        );
    }

    /// Independent oracle: evaluate every n in range.
    fn scan(lambda: &Rational, chi: &Rational, lo: i64, hi: i64) -> Extremes {
        let mut vals: Vec<(Rational, i64)> = (lo..=hi).map(|n| (g_bound_fn(lambda, chi, n).unwrap(), n)).collect();
        vals.sort();
        let (min, argmin) = vals[0].clone();
        let top = vals.iter().map(|(v, _)| v).max().unwrap().clone();
        let argmax = vals.iter().filter(|(v, _)| *v == top).map(|(_, n)| *n).min().unwrap();
        Extremes { min, argmin, max: top, argmax }
    }

    #[test]
    fn extremes_examples() {
        let ex = gbound_extremes(&int(9), &int(1), 1, 3).unwrap();
        assert_eq!((ex.max.clone(), ex.argmax), (frac(71, 4), 1));
        assert_eq!(ex, scan(&int(9), &int(1), 1, 3));

        let ex = gbound_extremes(&int(9), &int(4), 2, 10).unwrap();
        assert!(ex.argmax == 2 || ex.argmax == 10);
        assert_eq!(ex, scan(&int(9), &int(4), 2, 10));

        let ex = gbound_extremes(&frac(11, 2), &int(3), 4, 4).unwrap();
        assert_eq!(ex.min, ex.max);
        assert!(gbound_extremes(&int(9), &int(1), 3, 2).is_err());
    }

    #[test]
    fn chi_lower_examples() {
        let v = SingularityIndices::new(7, [(9, 1)]).unwrap();
        assert_eq!(chi_lower_from_indices(&v, 1).unwrap(), frac(16, 13));
        assert_eq!(chi_lower_from_indices(&SingularityIndices::zero(7).unwrap(), 1).unwrap(), int(0));
        assert!(chi_lower_from_indices(&v, 0).is_err());
        // A single s_{g+2} at g = 6 alone contributes (g^2-1)/(5g+4) = 35/34 > 1.
        assert!(forced_zero_indices(6, &int(1), 1).unwrap().contains(&8));
        assert!(!forced_zero_indices(6, &frac(35, 34), 1).unwrap().contains(&8));
    }

    #[test]
    fn forced_zero_examples() {
        let z = forced_zero_indices(11, &int(1), 1).unwrap();
        for k in 2..=6u32 {
            assert!(z.contains(&(2 * k + 1)), "missing s_{}", 2 * k + 1);
        }
        assert!(!z.contains(&3));
        let z = forced_zero_indices(13, &int(1), 1).unwrap();
        for k in 6..=7u32 {
            assert!(z.contains(&(2 * k)));
        }
        assert!(!z.contains(&10));
        assert!(forced_zero_indices(2, &int(100), 1).unwrap().is_empty());
        // s_{g+2} forced to vanish at chi = 1 exactly from g = 6 on.
        for g in 2..40u32 {
            let z = forced_zero_indices(g, &int(1), 1).unwrap();
            assert_eq!(z.contains(&(g + 2)), g >= 6, "g = {g}");
        }
    }

    #[test]
    fn minus_curve_examples() {
        let cap = minus_curve_ksq_cap(2, &int(1)).unwrap();
        assert_eq!(cap, frac(63, 8));
        assert_eq!(rational::floor(&cap), BigInt::from(7));
        assert_eq!(minus_curve_ksq_cap(1, &int(1)).unwrap(), int(8));
        assert_eq!(minus_curve_ksq_cap(3, &int(1)).unwrap(), frac(23, 3));
        assert!(minus_curve_ksq_cap(0, &int(1)).is_err());
    }

    #[test]
    fn s2_negative_cap_examples() {
        assert_eq!(
            s2_negative_genus_cap(&int(7), &int(1)).unwrap(),
            GenusCap::Bounded { value: frac(16, 3) }
        );
        assert_eq!(
            s2_negative_genus_cap(&int(4), &int(1)).unwrap(),
            GenusCap::Bounded { value: frac(22, 9) }
        );
        // Oracle: direct scan over g.
        for ksq in 1..=9 {
            let cap = s2_negative_genus_cap(&int(ksq), &int(1)).unwrap();
            let admissible: Vec<u32> = (2..=100)
                .filter(|&g| s2_negative_inequality_holds(g, &int(ksq), &int(1)))
                .collect();
            match cap {
                GenusCap::Bounded { value: c } => {
                    let top = rational::floor_i64(&c).unwrap();
                    let expect: Vec<u32> = (2..=100).filter(|&g| g as i64 <= top).collect();
                    assert_eq!(admissible, expect, "ksq = {ksq}");
                }
                GenusCap::Unbounded => assert_eq!(admissible.last(), Some(&100)),
                GenusCap::Infeasible => assert!(admissible.is_empty()),
            }
        }
        // g = 2 is admissible whenever K^2 >= 2 chi.
        assert!(s2_negative_inequality_holds(2, &int(2), &int(1)));
    }

    #[test]
    fn convexity_samples() {
        for lambda in [frac(9, 2), int(5), int(6), int(8), int(9), frac(35, 3)] {
            for chi in [1, 4, 10, 50] {
                let chi = int(chi);
                for n in 2..60 {
                    let a = g_bound_fn(&lambda, &chi, n - 1).unwrap();
                    let b = g_bound_fn(&lambda, &chi, n).unwrap();
                    let c = g_bound_fn(&lambda, &chi, n + 1).unwrap();
                    assert!(int(2) * b < a + c);
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]

        #[test]
        fn chi_lower_matches_slope_cap(g in 2u32..30, s2 in -20i64..120, raw in proptest::collection::vec(0i64..3, 31)) {
            let mut dense = vec![s2];
            dense.extend(raw.into_iter().take(g as usize));
            if g % 2 == 0 {
                *dense.last_mut().unwrap() = 0;
            }
            let v = SingularityIndices::from_dense(g, dense).unwrap();
            let chi = chi_from_indices(&v);
            let gi = g as i64;
            let cap = (int(9) - frac(4 * (gi - 1), gi)) * &chi;
            let lower = chi_lower_from_indices(&v, 1).unwrap();
            // Equivalent statements: excess within the cap iff chi above the bound.
            prop_assert_eq!(slope_excess(&v) <= cap, chi >= lower);
        }

        #[test]
        fn extremes_match_scan(ln in 1i64..80, ld in 1i64..10, chi in 1i64..30, lo in 1i64..20, len in 0i64..25) {
            let lambda = int(4) + frac(ln, 10 * ld);
            let ex = gbound_extremes(&lambda, &int(chi), lo, lo + len).unwrap();
            prop_assert_eq!(ex, scan(&lambda, &int(chi), lo, lo + len));
        }
    }
}
