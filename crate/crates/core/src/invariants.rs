//! Relative invariants of a hyperelliptic fibration from its singularity
//! indices.
//!
//! An index vector is `(s_2, s_3, ..., s_{g+2})`. Two families of formulas
//! compute `chi_f` and `K_f^2`: one in terms of `n` and one purely in terms of
//! the indices. Their summation limits differ, so the index convention is
//! fixed here once:
//!
//! * odd terms `s_{2k+1}` in the index-only family run over `k = 1..=g/2`, so
//!   they stop at `j = g+1`; `s_{g+2}` only enters through its own term;
//! * odd terms in the `n` family run over `k = 1..=(g+1)/2`, so for odd `g`
//!   the last one is `s_{g+2}` itself;
//! * even terms `s_{2k}` always run over `k = 2..=(g+1)/2`, never reaching
//!   `g+2`.
//!
//! Everything is exact.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SingularityIndices {
    g: u32,
    /// `s[j - 2]` holds `s_j` for `j = 2..=g+2`.
    s: Vec<i64>,
}

impl SingularityIndices {
    /// Builds a vector from `(j, s_j)` pairs; absent indices are zero.
    pub fn new(g: u32, entries: impl IntoIterator<Item = (u32, i64)>) -> Result<Self> {
        if g < 2 {
            return Err(Error::InvalidIndices(format!("genus {g} < 2")));
        }
        let mut s = vec![0i64; g as usize + 1];
        let mut seen = vec![false; g as usize + 1];
        for (j, v) in entries {
            if j < 2 || j > g + 2 {
                return Err(Error::InvalidIndices(format!(
                    "index s_{j} outside 2..={} for g = {g}",
                    g + 2
                )));
            }
            let slot = (j - 2) as usize;
            if seen[slot] {
                return Err(Error::InvalidIndices(format!("s_{j} given twice")));
            }
            seen[slot] = true;
            s[slot] = v;
        }
        Self::from_dense(g, s)
    }

    /// `dense[i]` is `s_{i+2}`; length must be `g + 1`.
    pub fn from_dense(g: u32, dense: Vec<i64>) -> Result<Self> {
        if g < 2 {
            return Err(Error::InvalidIndices(format!("genus {g} < 2")));
        }
        if dense.len() != g as usize + 1 {
            return Err(Error::InvalidIndices(format!(
                "expected {} entries (s_2..s_{}), got {}",
                g + 1,
                g + 2,
                dense.len()
            )));
        }
        let si = SingularityIndices { g, s: dense };
        si.validate()?;
        Ok(si)
    }

    pub fn zero(g: u32) -> Result<Self> {
        Self::new(g, [])
    }

    fn validate(&self) -> Result<()> {
        for j in 3..=self.g + 2 {
            let v = self.get(j);
            if v < 0 {
                return Err(Error::InvalidIndices(format!("s_{j} = {v} is negative")));
            }
        }
        if self.g.is_multiple_of(2) && self.top() != 0 {
            return Err(Error::InvalidIndices(format!(
                "s_{} = {} but must vanish for even g = {}",
                self.g + 2,
                self.top(),
                self.g
            )));
        }
        Ok(())
    }

    pub fn genus(&self) -> u32 {
        self.g
    }

    /// `s_j`, zero outside `2..=g+2`.
    pub fn get(&self, j: u32) -> i64 {
        if j < 2 || j > self.g + 2 {
            0
        } else {
            self.s[(j - 2) as usize]
        }
    }

    pub fn s2(&self) -> i64 {
        self.s[0]
    }

    /// `s_{g+2}`.
    pub fn top(&self) -> i64 {
        self.get(self.g + 2)
    }

    pub fn dense(&self) -> &[i64] {
        &self.s
    }

    pub fn nonzero(&self) -> Vec<(u32, i64)> {
        (2..=self.g + 2)
            .filter_map(|j| {
                let v = self.get(j);
                (v != 0).then_some((j, v))
            })
            .collect()
    }

    /// Copy with `s_j` replaced.
    pub fn with(&self, j: u32, v: i64) -> Result<Self> {
        if j < 2 || j > self.g + 2 {
            return Err(Error::InvalidIndices(format!("index s_{j} outside range")));
        }
        let mut s = self.s.clone();
        s[(j - 2) as usize] = v;
        Self::from_dense(self.g, s)
    }

    fn q(&self, j: u32) -> Rational {
        int(self.get(j))
    }
}

impl std::fmt::Display for SingularityIndices {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "g={}", self.g)?;
        for (j, v) in self.nonzero() {
            write!(f, " s{j}={v}")?;
        }
        Ok(())
    }
}

/// Parses the [`Display`](std::fmt::Display) form: `g=7 s2=30 s6=1`, tokens
/// separated by whitespace or commas, in any order.
impl std::str::FromStr for SingularityIndices {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut g = None;
        let mut entries = Vec::new();
        for tok in text.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let (key, val) = tok
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {tok:?}")))?;
            let val: i64 = val
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("not an integer in {tok:?}")))?;
            let key = key.trim();
            if key == "g" {
                if g.is_some() {
                    return Err(Error::Parse("g given twice".into()));
                }
                g = Some(u32::try_from(val).map_err(|_| Error::Parse(format!("bad genus {val}")))?);
            } else if let Some(j) = key.strip_prefix('s').or_else(|| key.strip_prefix("s_")) {
                let j: u32 = j
                    .trim_start_matches('_')
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad index name {key:?}")))?;
                entries.push((j, val));
            } else {
                return Err(Error::Parse(format!("unknown key {key:?}")));
            }
        }
        let g = g.ok_or_else(|| Error::Parse("missing g=".into()))?;
        SingularityIndices::new(g, entries)
    }
}

#[derive(Serialize, Deserialize)]
struct IndicesRepr {
    g: u32,
    s: BTreeMap<u32, i64>,
}

impl Serialize for SingularityIndices {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        IndicesRepr {
            g: self.g,
            s: self.nonzero().into_iter().collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for SingularityIndices {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let repr = IndicesRepr::deserialize(de)?;
        SingularityIndices::new(repr.g, repr.s).map_err(serde::de::Error::custom)
    }
}

/// Odd index terms `(k, 2k+1)` for `k = 1..=upper`.
fn odd_terms(upper: u32) -> impl Iterator<Item = (i64, u32)> {
    (1..=upper).map(|k| (k as i64, 2 * k + 1))
}

/// Even index terms `(k, 2k)` for `k = 2..=(g+1)/2`.
fn even_terms(g: u32) -> impl Iterator<Item = (i64, u32)> {
    (2..=g.div_ceil(2)).map(|k| (k as i64, 2 * k))
}

pub fn e_from_indices(si: &SingularityIndices) -> BigInt {
    let g = si.g;
    let mut e = BigInt::from(si.s2()) - 2 * BigInt::from(si.top());
    for (_, j) in odd_terms(g / 2) {
        e += si.get(j);
    }
    for (_, j) in even_terms(g) {
        e += 2 * BigInt::from(si.get(j));
    }
    e
}

/// `n` from `2n(2g+1) = e_f + (g+1)(2g+4)s_{g+2} + ...`.
pub fn n_from_indices(si: &SingularityIndices) -> Rational {
    let g = si.g as i64;
    let mut acc = Rational::from_integer(e_from_indices(si));
    acc += int((g + 1) * (2 * g + 4)) * si.q(si.g + 2);
    for (k, j) in odd_terms(si.g / 2) {
        acc += int(8 * k * k + 4 * k - 1) * si.q(j);
    }
    for (k, j) in even_terms(si.g) {
        acc += int(4 * k * k - 2 * k - 2) * si.q(j);
    }
    acc / int(2 * (2 * g + 1))
}

/// True iff `n` is a positive integer, and even when `g` is odd.
pub fn validate_n(g: u32, n: &Rational) -> bool {
    n_check(g, n, true)
}

fn n_check(g: u32, n: &Rational, require_parity: bool) -> bool {
    if !n.is_integer() || !n.is_positive() {
        return false;
    }
    !(require_parity && g % 2 == 1 && !rational::is_even_integer(n))
}

pub fn chi_from_indices(si: &SingularityIndices) -> Rational {
    let g = si.g as i64;
    let q = 2 * g + 1;
    let mut chi = (int(g) * si.q(2) + int(g * g - 2 * g - 1) * si.q(si.g + 2)) / int(4 * q);
    for (k, j) in odd_terms(si.g / 2) {
        chi += rational::frac(k * (g - k), q) * si.q(j);
    }
    for (k, j) in even_terms(si.g) {
        chi += rational::frac(k * (g - k + 1), 2 * q) * si.q(j);
    }
    chi
}

pub fn chi_via_n(si: &SingularityIndices, n: &Rational) -> Rational {
    let g = si.g as i64;
    let mut chi = int(g) * n / int(2);
    for (k, j) in odd_terms(si.g.div_ceil(2)) {
        chi -= int(k * k) * si.q(j);
    }
    for (k, j) in even_terms(si.g) {
        chi -= rational::frac(k * (k - 1), 2) * si.q(j);
    }
    chi
}

pub fn ksq_from_indices(si: &SingularityIndices) -> Rational {
    let g = si.g as i64;
    let q = 2 * g + 1;
    let mut ksq = int(g - 1) * (si.q(2) + int(3 * g + 1) * si.q(si.g + 2)) / int(q);
    for (k, j) in odd_terms(si.g / 2) {
        ksq += rational::frac(12 * k * (g - k) - 2 * g - 1, q) * si.q(j);
    }
    for (k, j) in even_terms(si.g) {
        ksq += rational::frac(6 * k * (g - k + 1) - 4 * g - 2, q) * si.q(j);
    }
    ksq
}

pub fn ksq_via_n(si: &SingularityIndices, n: &Rational) -> Rational {
    let g = si.g as i64;
    let mut ksq = int(2 * g - 2) * n + si.q(si.g + 2);
    for (k, j) in odd_terms(si.g.div_ceil(2)) {
        ksq -= int((2 * k - 1) * (2 * k - 1)) * si.q(j);
    }
    for (k, j) in even_terms(si.g) {
        ksq -= int(2 * (k - 1) * (k - 1)) * si.q(j);
    }
    ksq
}

/// `K_f^2 - 4(g-1)/g * chi_f`, evaluated from the indices directly.
pub fn slope_excess(si: &SingularityIndices) -> Rational {
    let g = si.g as i64;
    let mut acc = rational::frac(g * g - 1, g) * si.q(si.g + 2);
    for (k, j) in odd_terms(si.g / 2) {
        acc += rational::frac(4 * k * (g - k) - g, g) * si.q(j);
    }
    for (k, j) in even_terms(si.g) {
        acc += rational::frac(2 * k * (g - k + 1) - 2 * g, g) * si.q(j);
    }
    acc
}

/// Right-hand side of `K_f^2 - 4 chi_f + 2n = (2g+2)s_{g+2} + sum (4k-1)s_{2k+1}
/// + sum 2(k-1)s_{2k}`. Integral for every index vector.
pub fn excess_plus_2n(si: &SingularityIndices) -> BigInt {
    let g = si.g as i64;
    let mut acc = BigInt::from((2 * g + 2) * si.top());
    for (k, j) in odd_terms(si.g / 2) {
        acc += BigInt::from((4 * k - 1) * si.get(j));
    }
    for (k, j) in even_terms(si.g) {
        acc += BigInt::from(2 * (k - 1) * si.get(j));
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibrationNumerics {
    pub g: u32,
    /// Base genus.
    pub b: u32,
    #[serde(with = "rational::rational_str")]
    pub n: Rational,
    #[serde(with = "rational::rational_str")]
    pub chi: Rational,
    #[serde(with = "rational::rational_str")]
    pub ksq: Rational,
    #[serde(with = "rational::rational_str")]
    pub e: Rational,
    /// `ksq / chi`; absent when `chi <= 0`.
    #[serde(with = "rational::opt_rational_str", default)]
    pub lambda: Option<Rational>,
}

impl FibrationNumerics {
    pub fn noether_holds(&self) -> bool {
        int(12) * &self.chi == &self.ksq + &self.e
    }

    /// Absolute invariants of the total space.
    pub fn surface(&self) -> SurfaceInvariants {
        let shift = int((self.g as i64 - 1) * (self.b as i64 - 1));
        SurfaceInvariants {
            chi: &self.chi + &shift,
            ksq: &self.ksq + int(8) * &shift,
            euler: &self.e + int(4) * &shift,
        }
    }
}

/// `chi(O_S)`, `K_S^2` and the topological Euler number of `S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceInvariants {
    #[serde(with = "rational::rational_str")]
    pub chi: Rational,
    #[serde(with = "rational::rational_str")]
    pub ksq: Rational,
    #[serde(with = "rational::rational_str")]
    pub euler: Rational,
}

/// Full record with the strict `n` gate (odd `g` forces even `n`).
pub fn numerics(si: &SingularityIndices, b: u32) -> Result<FibrationNumerics> {
    numerics_with(si, b, true)
}

/// Like [`numerics`]; `require_parity = false` only checks `n` is a positive
/// integer.
pub fn numerics_with(si: &SingularityIndices, b: u32, require_parity: bool) -> Result<FibrationNumerics> {
    let n = n_from_indices(si);
    if !n_check(si.g, &n, require_parity) {
        return Err(Error::NotGeometric {
            g: si.g,
            n: rational::fmt_rational(&n),
        });
    }
    let chi = chi_from_indices(si);
    let chi_n = chi_via_n(si, &n);
    if chi != chi_n {
        return Err(Error::FormulaMismatch(format!(
            "chi: {} from indices vs {} via n for {si}",
            rational::fmt_rational(&chi),
            rational::fmt_rational(&chi_n)
        )));
    }
    let ksq = ksq_from_indices(si);
    let ksq_n = ksq_via_n(si, &n);
    if ksq != ksq_n {
        return Err(Error::FormulaMismatch(format!(
            "K^2: {} from indices vs {} via n for {si}",
            rational::fmt_rational(&ksq),
            rational::fmt_rational(&ksq_n)
        )));
    }
    let e = Rational::from_integer(e_from_indices(si));
    let lambda = chi.is_positive().then(|| &ksq / &chi);
    let out = FibrationNumerics {
        g: si.g,
        b,
        n,
        chi,
        ksq,
        e,
        lambda,
    };
    if !out.noether_holds() {
        return Err(Error::FormulaMismatch(format!("Noether fails for {si}")));
    }
    Ok(out)
}

/// Cleared-denominator form of the index-only chi formula:
/// `4(2g+1) chi = g s_2 + sum_j coefficient(j) s_j` for `j >= 3`.
/// Returns `(j, coefficient)` for every `j` in `3..=g+2`.
pub fn chi_equation_coefficients(g: u32) -> Vec<(u32, i64)> {
    let gi = g as i64;
    let mut coef: BTreeMap<u32, i64> = (3..=g + 2).map(|j| (j, 0)).collect();
    *coef.get_mut(&(g + 2)).unwrap() += gi * gi - 2 * gi - 1;
    for (k, j) in odd_terms(g / 2) {
        *coef.get_mut(&j).unwrap() += 4 * k * (gi - k);
    }
    for (k, j) in even_terms(g) {
        *coef.get_mut(&j).unwrap() += 2 * k * (gi - k + 1);
    }
    coef.into_iter().collect()
}

/// `g * slope_excess` coefficients: `(j, c_j)` with
/// `g * slope_excess(si) = sum_j c_j s_j`.
pub fn slope_excess_coefficients(g: u32) -> Vec<(u32, i64)> {
    let gi = g as i64;
    let mut coef: BTreeMap<u32, i64> = (3..=g + 2).map(|j| (j, 0)).collect();
    *coef.get_mut(&(g + 2)).unwrap() += gi * gi - 1;
    for (k, j) in odd_terms(g / 2) {
        *coef.get_mut(&j).unwrap() += 4 * k * (gi - k) - gi;
    }
    for (k, j) in even_terms(g) {
        *coef.get_mut(&j).unwrap() += 2 * k * (gi - k + 1) - 2 * gi;
    }
    coef.into_iter().collect()
}

impl FibrationNumerics {
    pub fn is_zero(&self) -> bool {
        self.chi.is_zero() && self.ksq.is_zero() && self.e.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;
    use proptest::prelude::*;

    fn si(g: u32, entries: &[(u32, i64)]) -> SingularityIndices {
        SingularityIndices::new(g, entries.iter().copied()).unwrap()
    }

    #[test]
    fn parses_token_form() {
        let v: SingularityIndices = "g=7 s2=30 s6=1".parse().unwrap();
        assert_eq!(v, si(7, &[(2, 30), (6, 1)]));
        assert_eq!(v.to_string().parse::<SingularityIndices>().unwrap(), v);
        assert_eq!("s_2=2, s_8=1, g=14".parse::<SingularityIndices>().unwrap(), si(14, &[(2, 2), (8, 1)]));
        assert_eq!("s2=1".parse::<SingularityIndices>().unwrap_err().kind(), "parse");
        assert_eq!("g=7 s2=x".parse::<SingularityIndices>().unwrap_err().kind(), "parse");
        assert_eq!("g=6 s8=1".parse::<SingularityIndices>().unwrap_err().kind(), "invalid_indices");
    }

    /// Term-by-term re-evaluation of e_f, independent of the helper iterators.
    fn e_oracle(si: &SingularityIndices) -> i64 {
        let g = si.genus();
        let mut e = si.get(2) - 2 * si.get(g + 2);
        let mut j = 3;
        while j <= g + 1 {
            e += si.get(j);
            j += 2;
        }
        let mut j = 4;
        while j <= g + 1 {
            e += 2 * si.get(j);
            j += 2;
        }
        e
    }

    #[test]
    fn e_examples() {
        assert_eq!(e_from_indices(&SingularityIndices::zero(7).unwrap()), BigInt::zero());
        let v = si(7, &[(2, 30), (6, 1)]);
        assert_eq!(e_from_indices(&v), BigInt::from(32));
        assert_eq!(e_oracle(&v), 32);
    }

    #[test]
    fn n_examples() {
        assert_eq!(n_from_indices(&si(7, &[(2, 30), (6, 1)])), int(2));
        for m in 1..5 {
            assert_eq!(n_from_indices(&si(4, &[(2, 2 * 9 * m)])), int(m));
        }
        // s_2 = 10k + 6 with k = 3.
        assert_eq!(n_from_indices(&si(16, &[(2, 36), (6, 1)])), int(1));
        assert_eq!(n_from_indices(&si(16, &[(2, 38), (6, 1)])), frac(34, 33));
    }

    #[test]
    fn validate_n_examples() {
        assert!(validate_n(7, &int(2)));
        assert!(!validate_n(6, &frac(1, 2)));
        assert!(!validate_n(5, &int(1)));
        assert!(validate_n(6, &int(1)));
        assert!(!validate_n(4, &int(0)));
        assert!(!validate_n(4, &int(-2)));
    }

    #[test]
    fn chi_and_ksq_examples() {
        let ex1 = si(7, &[(2, 30), (6, 1)]);
        assert_eq!(chi_from_indices(&ex1), int(4));
        assert_eq!(chi_via_n(&ex1, &int(2)), int(4));
        assert_eq!(ksq_from_indices(&ex1), int(16));
        assert_eq!(ksq_via_n(&ex1, &int(2)), int(16));

        let ex2 = si(16, &[(2, 36), (6, 1)]);
        assert_eq!(chi_from_indices(&ex2), int(5));
        assert_eq!(ksq_from_indices(&ex2), int(22));

        let zero = SingularityIndices::zero(9).unwrap();
        assert_eq!(chi_from_indices(&zero), int(0));
        assert_eq!(chi_via_n(&zero, &int(0)), int(0));
        assert_eq!(ksq_via_n(&zero, &int(0)), int(0));
    }

    #[test]
    fn top_index_double_role_odd_genus() {
        // s_15 = s_{g+2} for g = 13 enters both families differently.
        let v = si(13, &[(2, 4), (15, 1)]);
        let n = n_from_indices(&v);
        assert_eq!(chi_via_n(&v, &n), chi_from_indices(&v));
        assert_eq!(ksq_via_n(&v, &n), ksq_from_indices(&v));
    }

    #[test]
    fn numerics_examples() {
        let num = numerics(&si(7, &[(2, 30), (6, 1)]), 1).unwrap();
        assert_eq!(
            (num.g, num.n.clone(), num.chi.clone(), num.ksq.clone(), num.e.clone()),
            (7, int(2), int(4), int(16), int(32))
        );
        assert_eq!(num.lambda, Some(int(4)));

        let err = numerics(&SingularityIndices::zero(7).unwrap(), 1).unwrap_err();
        assert!(matches!(err, Error::NotGeometric { .. }));

        let num = numerics(&si(14, &[(2, 46), (4, 1)]), 1).unwrap();
        assert_eq!((num.chi.clone(), num.ksq.clone(), num.e.clone()), (int(6), int(24), int(48)));
        assert_eq!(int(12) * &num.chi, &num.ksq + &num.e);
    }

    #[test]
    fn numerics_parity_gate() {
        // g = 5, s_2 = 22: n = 1, integral but odd.
        let v = si(5, &[(2, 22)]);
        assert_eq!(n_from_indices(&v), int(1));
        assert!(numerics(&v, 1).is_err());
        assert!(numerics_with(&v, 1, false).is_ok());
    }

    #[test]
    fn surface_invariants_shift() {
        let num = numerics(&si(7, &[(2, 30), (6, 1)]), 1).unwrap();
        let surf = num.surface();
        assert_eq!((surf.chi, surf.ksq, surf.euler), (int(4), int(16), int(32)));
        let mut num2 = num.clone();
        num2.b = 2;
        let surf = num2.surface();
        assert_eq!((surf.chi, surf.ksq, surf.euler), (int(10), int(64), int(56)));
    }

    #[test]
    fn slope_excess_examples() {
        let ex1 = si(7, &[(2, 30), (6, 1)]);
        assert_eq!(slope_excess(&ex1), frac(16, 7));
        assert_eq!(int(16) - frac(24, 7) * int(4), frac(16, 7));
        let ex2 = si(16, &[(2, 36), (6, 1)]);
        assert_eq!(slope_excess(&ex2), frac(13, 4));
        assert_eq!(int(22) - frac(15, 4) * int(5), frac(13, 4));
        assert_eq!(slope_excess(&SingularityIndices::zero(3).unwrap()), int(0));
    }

    #[test]
    fn validation_errors() {
        assert!(SingularityIndices::new(7, [(3, -1)]).is_err());
        assert!(SingularityIndices::new(6, [(8, 1)]).is_err());
        assert!(SingularityIndices::new(7, [(9, 1)]).is_ok());
        assert!(SingularityIndices::new(7, [(10, 1)]).is_err());
        assert!(SingularityIndices::new(1, []).is_err());
        assert!(SingularityIndices::new(7, [(2, -5)]).is_ok());
        assert!(SingularityIndices::new(7, [(2, 1), (2, 2)]).is_err());
    }

    #[test]
    fn json_shape() {
        let v = si(7, &[(2, 30), (6, 1)]);
        let js = serde_json::to_string(&v).unwrap();
        assert_eq!(js, r#"{"g":7,"s":{"2":30,"6":1}}"#);
        let back: SingularityIndices = serde_json::from_str(&js).unwrap();
        assert_eq!(back, v);
        assert!(serde_json::from_str::<SingularityIndices>(r#"{"g":6,"s":{"8":1}}"#).is_err());

        let num = numerics(&v, 1).unwrap();
        let js = serde_json::to_value(&num).unwrap();
        assert_eq!(js["chi"], "4");
        assert_eq!(js["lambda"], "4");
    }

    #[test]
    fn cleared_chi_coefficients_match_formula() {
        for g in 2..30u32 {
            let coef = chi_equation_coefficients(g);
            for (j, c) in coef {
                if g % 2 == 0 && j == g + 2 {
                    continue;
                }
                let v = SingularityIndices::new(g, [(j, 1)]).unwrap();
                assert_eq!(chi_from_indices(&v) * int(4 * (2 * g as i64 + 1)), int(c));
            }
        }
    }

    fn arb_indices() -> impl Strategy<Value = SingularityIndices> {
        (2u32..=40).prop_flat_map(|g| {
            (
                Just(g),
                -60i64..200,
                proptest::collection::vec(prop_oneof![3 => Just(0i64), 2 => 0i64..4], g as usize),
            )
                .prop_map(|(g, s2, mut rest)| {
                    if g % 2 == 0 {
                        *rest.last_mut().unwrap() = 0;
                    }
                    let mut dense = vec![s2];
                    dense.extend(rest);
                    SingularityIndices::from_dense(g, dense).unwrap()
                })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn dual_formulas_agree(v in arb_indices()) {
            let n = n_from_indices(&v);
            prop_assert_eq!(chi_via_n(&v, &n), chi_from_indices(&v));
            prop_assert_eq!(ksq_via_n(&v, &n), ksq_from_indices(&v));
        }

        #[test]
        fn noether(v in arb_indices()) {
            let e = Rational::from_integer(e_from_indices(&v));
            prop_assert_eq!(int(12) * chi_from_indices(&v), ksq_from_indices(&v) + e);
            prop_assert_eq!(e_from_indices(&v), BigInt::from(e_oracle(&v)));
        }

        #[test]
        fn slope_excess_identity(v in arb_indices()) {
            let g = v.genus() as i64;
            let lhs = ksq_from_indices(&v) - frac(4 * (g - 1), g) * chi_from_indices(&v);
            prop_assert_eq!(slope_excess(&v), lhs);
        }

        #[test]
        fn excess_plus_2n_identity(v in arb_indices()) {
            let n = n_from_indices(&v);
            let lhs = ksq_from_indices(&v) - int(4) * chi_from_indices(&v) + int(2) * n;
            prop_assert_eq!(lhs, Rational::from_integer(excess_plus_2n(&v)));
        }
    }
}
