//! Numerical classes on a ruled surface over an elliptic curve and its
//! blow-ups at points.
//!
//! Basis: a section class (`C_0` for the split bundle, `C` for the
//! indecomposable one), the fiber `Γ`, and exceptional curves `E_i`. A class
//! `(a, b, [β_1, ..])` stands for `a·section + b·Γ - Σ β_i E_i`, so strict
//! transforms through a point of multiplicity `β` carry a positive `β`.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{frac, int, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum SurfaceKind {
    /// `P(O ⊕ N)` with `N` torsion of order `m`; sections `C_0`, `C_∞` with
    /// `C_0^2 = 0`.
    SplitTorsion { m: u32 },
    /// `P(V)` with `V` indecomposable of degree one; section `C` with `C^2 = 1`.
    IndecDeg1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceModel {
    #[serde(flatten)]
    pub kind: SurfaceKind,
    /// Number of points blown up.
    pub blowups: usize,
}

impl SurfaceModel {
    pub fn split_torsion(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::Domain("torsion order must be >= 1".into()));
        }
        Ok(SurfaceModel {
            kind: SurfaceKind::SplitTorsion { m },
            blowups: 0,
        })
    }

    pub fn indec_deg1() -> Self {
        SurfaceModel {
            kind: SurfaceKind::IndecDeg1,
            blowups: 0,
        }
    }

    pub fn blown_up(self, t: usize) -> Self {
        SurfaceModel { blowups: t, ..self }
    }

    /// Self-intersection of the basis section class.
    pub fn section_square(&self) -> i64 {
        match self.kind {
            SurfaceKind::SplitTorsion { .. } => 0,
            SurfaceKind::IndecDeg1 => 1,
        }
    }

    /// `chi(O)` is a birational invariant and equals `1 - q = 0` here.
    pub fn chi_structure_sheaf(&self) -> Rational {
        Rational::zero()
    }

    fn section_name(&self) -> &'static str {
        match self.kind {
            SurfaceKind::SplitTorsion { .. } => "C0",
            SurfaceKind::IndecDeg1 => "C",
        }
    }
}

impl fmt::Display for SurfaceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SurfaceKind::SplitTorsion { m } => write!(f, "P(O+N), ord N = {m}")?,
            SurfaceKind::IndecDeg1 => write!(f, "P(V), V indecomposable of degree 1")?,
        }
        if self.blowups > 0 {
            write!(f, ", blown up at {} point(s)", self.blowups)?;
        }
        Ok(())
    }
}

/// Ordered lexicographically by `(a, b, exc)`, which fixes witness choice.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DivisorClass {
    pub a: i64,
    pub b: i64,
    #[serde(default)]
    pub exc: Vec<i64>,
}

impl DivisorClass {
    pub fn new(a: i64, b: i64, exc: Vec<i64>) -> Self {
        DivisorClass { a, b, exc }
    }

    pub fn base(a: i64, b: i64) -> Self {
        DivisorClass { a, b, exc: Vec::new() }
    }

    pub fn section() -> Self {
        Self::base(1, 0)
    }

    pub fn fiber() -> Self {
        Self::base(0, 1)
    }

    /// `E_i` on a surface with `t` blow-ups.
    pub fn exceptional(i: usize, t: usize) -> Self {
        let mut exc = vec![0; t];
        exc[i] = -1;
        DivisorClass { a: 0, b: 0, exc }
    }

    /// Total transform to a surface with `t >= exc.len()` blow-ups.
    pub fn pullback(&self, t: usize) -> Self {
        let mut exc = self.exc.clone();
        exc.resize(t.max(exc.len()), 0);
        DivisorClass { exc, ..*self }
    }

    /// `self - Σ β_i E_i`, appended to the existing multiplicities.
    pub fn minus_exceptional(&self, betas: &[i64]) -> Self {
        let mut out = self.pullback(betas.len());
        for (slot, beta) in out.exc.iter_mut().zip(betas) {
            *slot += beta;
        }
        out
    }

    pub fn is_base(&self) -> bool {
        self.exc.iter().all(|&x| x == 0)
    }

    pub fn scaled(&self, k: i64) -> Self {
        DivisorClass {
            a: k * self.a,
            b: k * self.b,
            exc: self.exc.iter().map(|x| k * x).collect(),
        }
    }

    pub fn render(&self, s: &SurfaceModel) -> String {
        let mut terms = Vec::new();
        let mut push = |c: i64, name: String| {
            if c != 0 {
                terms.push(match c {
                    1 => name,
                    -1 => format!("-{name}"),
                    _ => format!("{c}{name}"),
                });
            }
        };
        push(self.a, s.section_name().to_string());
        push(self.b, "G".to_string());
        for (i, beta) in self.exc.iter().enumerate() {
            let name = if self.exc.len() == 1 { "E".to_string() } else { format!("E{}", i + 1) };
            push(-beta, name);
        }
        if terms.is_empty() {
            return "0".into();
        }
        terms.join(" + ").replace("+ -", "- ")
    }
}

impl std::ops::Add for &DivisorClass {
    type Output = DivisorClass;

    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        let t = self.exc.len().max(rhs.exc.len());
        let (l, r) = (self.pullback(t), rhs.pullback(t));
        DivisorClass {
            a: l.a + r.a,
            b: l.b + r.b,
            exc: l.exc.iter().zip(&r.exc).map(|(x, y)| x + y).collect(),
        }
    }
}

impl std::ops::Sub for &DivisorClass {
    type Output = DivisorClass;

    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        self + &rhs.scaled(-1)
    }
}

fn check_on(d: &DivisorClass, s: &SurfaceModel) -> Result<()> {
    if d.exc.len() != s.blowups {
        return Err(Error::SurfaceMismatch(format!(
            "class has {} exceptional coordinates, surface has {} blow-ups",
            d.exc.len(),
            s.blowups
        )));
    }
    Ok(())
}

/// Intersection pairing. Base part `a a' s + a b' + a' b` with `s` the
/// section square, minus `Σ β_i β'_i` from `E_i^2 = -1`.
pub fn intersect(d1: &DivisorClass, d2: &DivisorClass, s: &SurfaceModel) -> Result<i64> {
    check_on(d1, s)?;
    check_on(d2, s)?;
    let (a1, b1, a2, b2) = (d1.a as i128, d1.b as i128, d2.a as i128, d2.b as i128);
    let mut v = a1 * a2 * s.section_square() as i128 + a1 * b2 + a2 * b1;
    for (x, y) in d1.exc.iter().zip(&d2.exc) {
        v -= (*x as i128) * (*y as i128);
    }
    i64::try_from(v).map_err(|_| Error::Overflow("intersection number exceeds i64".into()))
}

pub fn self_intersection(d: &DivisorClass, s: &SurfaceModel) -> Result<i64> {
    intersect(d, d, s)
}

/// `K ≡ -2C_0` (split) or `-2C + Γ` (indecomposable), plus `Σ E_i`.
pub fn canonical(s: &SurfaceModel) -> DivisorClass {
    let (a, b) = match s.kind {
        SurfaceKind::SplitTorsion { .. } => (-2, 0),
        SurfaceKind::IndecDeg1 => (-2, 1),
    };
    DivisorClass::new(a, b, vec![-1; s.blowups])
}

/// `p_a = 1 + D·(D + K)/2`.
pub fn adjunction_genus(d: &DivisorClass, s: &SurfaceModel) -> Result<Rational> {
    let k = canonical(s);
    let dk = intersect(d, &(d + &k), s)?;
    Ok(int(1) + frac(dk, 2))
}

/// `g = R·Γ/2 - 1` for a branch class of relative degree `2g + 2`.
pub fn fiber_genus_from_branch(r: &DivisorClass) -> Result<u32> {
    // Γ meets the section once and is disjoint from the exceptional curves.
    let deg = r.a;
    if deg % 2 != 0 || deg < 6 {
        return Err(Error::Domain(format!(
            "branch class meets a fiber in {deg} points; need an even number >= 6"
        )));
    }
    u32::try_from(deg / 2 - 1).map_err(|_| Error::Overflow("genus exceeds u32".into()))
}

/// `n = R^2 / (4(g+1))`, on a class pulled back from the unblown surface.
pub fn branch_n(r: &DivisorClass, s: &SurfaceModel) -> Result<Rational> {
    if !r.is_base() {
        return Err(Error::Domain("branch_n needs a class with no exceptional part".into()));
    }
    let g = fiber_genus_from_branch(r)? as i64;
    let r2 = self_intersection(r, s)?;
    Ok(frac(r2, 4 * (g + 1)))
}

pub fn halve_even_class(d: &DivisorClass) -> Result<DivisorClass> {
    let even = |x: i64| x % 2 == 0;
    if !even(d.a) || !even(d.b) || !d.exc.iter().all(|&x| even(x)) {
        return Err(Error::NotTwoDivisible(format!("({}, {}, {:?})", d.a, d.b, d.exc)));
    }
    Ok(DivisorClass {
        a: d.a / 2,
        b: d.b / 2,
        exc: d.exc.iter().map(|x| x / 2).collect(),
    })
}

/// `(chi(O_S), K_S^2)` of the double cover branched along `2δ`:
/// `chi = 2 chi(O) + δ·(δ+K)/2` and `K^2 = 2 (K+δ)^2`.
pub fn double_cover_invariants(s: &SurfaceModel, delta: &DivisorClass) -> Result<(Rational, Rational)> {
    let k = canonical(s);
    let kd = &k + delta;
    let chi = int(2) * s.chi_structure_sheaf() + frac(intersect(delta, &kd, s)?, 2);
    let ksq = int(2) * int(self_intersection(&kd, s)?);
    Ok((chi, ksq))
}

/// `(K + R)·R`; over an elliptic base the relative and absolute canonical
/// classes agree numerically.
pub fn s2_of_smooth_branch(s: &SurfaceModel, r: &DivisorClass) -> Result<i64> {
    let k = canonical(s);
    intersect(&(&k + r), r, s)
}
